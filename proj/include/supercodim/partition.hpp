#pragma once

// Integer partitions, hook-length character degrees and the growth
// function Phi(mu) = (n^n / prod mu_i^mu_i)^(1/n), kept exact: the n-th
// power Phi(mu)^n is an explicit rational and decimal digits come from
// integer n-th roots, never from floating point.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace supercodim {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("partition parts must be >= 1");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  // "34,33,33" -> Partition({34, 33, 33})
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
      std::size_t pos = 0;
      int value = 0;
      try {
        value = std::stoi(item, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad partition part '" + item + "'");
      }
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos])))
        ++pos;
      if (pos != item.size())
        throw std::invalid_argument("bad partition part '" + item + "'");
      parts.push_back(value);
    }
    if (parts.empty())
      throw std::invalid_argument("empty partition text");
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int num_parts() const { return static_cast<int>(parts_.size()); }

  int n() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  Partition conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
      for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
  }

  // hook length of cell (i, j), 0-based
  int hook(int i, int j) const {
    auto conj = conjugate();
    return parts_[i] - j + conj.parts()[j] - i - 1;
  }

  // number of standard Young tableaux, n! / prod hooks
  BigInt hook_degree() const {
    BigInt num = factorial(static_cast<unsigned long>(n()));
    BigInt den = 1;
    auto conj = conjugate().parts();
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (int j = 0; j < parts_[i]; ++j)
        den *= parts_[i] - j + conj[j] - static_cast<int>(i) - 1;
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
      throw std::logic_error("hook product does not divide n!");
    return q;
  }

  // Phi(mu)^n = n^n / prod mu_i^mu_i, exact
  BigRat phi_pow_n() const {
    if (parts_.empty())
      throw std::invalid_argument("Phi of the empty partition is undefined");
    unsigned long nn = static_cast<unsigned long>(n());
    BigInt den = 1;
    for (int p : parts_)
      den *= int_pow(BigInt(p), static_cast<unsigned long>(p));
    return BigRat(int_pow(BigInt(static_cast<long>(nn)), nn), den);
  }

  // decimal expansion of Phi(mu), truncated (floor) to `digits` places
  std::string phi_decimal(int digits = 6) const {
    if (digits < 0) throw std::invalid_argument("digits must be >= 0");
    BigRat pn = phi_pow_n();
    unsigned long nn = static_cast<unsigned long>(n());
    // floor(Phi * 10^digits) = floor((p * 10^(n*digits) / q)^(1/n))
    BigInt scaled = pn.numerator() *
                    int_pow(BigInt(10), nn * static_cast<unsigned long>(digits));
    BigInt x;
    mpz_fdiv_q(x.get_mpz_t(), scaled.get_mpz_t(), pn.denominator().get_mpz_t());
    BigInt root;
    mpz_root(root.get_mpz_t(), x.get_mpz_t(), nn);
    std::string s = root.get_str();
    if (digits == 0) return s;
    if (static_cast<int>(s.size()) <= digits)
      s.insert(0, std::string(digits + 1 - s.size(), '0'));
    s.insert(s.size() - digits, ".");
    return s;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// All partitions of n with at most max_parts parts (max_parts <= 0 means
// unbounded), first part descending; deterministic order.
inline void for_each_partition(int n, int max_parts,
                               const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  int cap = max_parts <= 0 ? n : max_parts;
  std::vector<int> acc;
  std::function<void(int, int, int)> rec = [&](int left, int max_first, int slots) {
    if (left == 0) {
      fn(Partition(acc));
      return;
    }
    if (slots == 0) return;
    for (int first = std::min(left, max_first); first >= 1; --first) {
      // remaining `left - first` must fit into `slots - 1` parts of size <= first
      if (static_cast<long long>(first) * (slots - 1) < left - first) continue;
      acc.push_back(first);
      rec(left - first, first, slots - 1);
      acc.pop_back();
    }
  };
  if (n == 0) {
    fn(Partition());
    return;
  }
  rec(n, n, cap);
}

inline long long count_partitions(int n, int max_parts = 0) {
  long long c = 0;
  for_each_partition(n, max_parts, [&](const Partition&) { ++c; });
  return c;
}

}  // namespace supercodim
