#pragma once

// Exact arithmetic in Q(sqrt(3)): values a + b*sqrt3 with rational a, b.
// Comparisons never touch floating point; the sign of a + b*sqrt3 with
// a, b of opposite sign is decided by comparing a^2 against 3*b^2.

#include <ostream>
#include <string>

#include "rational.hpp"

namespace supercodim {

class QuadExt3 {
 public:
  QuadExt3() = default;
  QuadExt3(BigRat rational) : a_(std::move(rational)) {}
  QuadExt3(long n) : a_(n) {}
  QuadExt3(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt3 sqrt3() { return QuadExt3(BigRat(0), BigRat(1)); }

  const BigRat& rational_part() const { return a_; }
  const BigRat& sqrt3_part() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt3 operator-() const { return QuadExt3(-a_, -b_); }

  friend QuadExt3 operator+(const QuadExt3& x, const QuadExt3& y) {
    return QuadExt3(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend QuadExt3 operator-(const QuadExt3& x, const QuadExt3& y) {
    return QuadExt3(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend QuadExt3 operator*(const QuadExt3& x, const QuadExt3& y) {
    // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s,  s^2 = 3
    return QuadExt3(x.a_ * y.a_ + BigRat(3) * x.b_ * y.b_,
                    x.a_ * y.b_ + x.b_ * y.a_);
  }

  QuadExt3& operator+=(const QuadExt3& o) { return *this = *this + o; }
  QuadExt3& operator-=(const QuadExt3& o) { return *this = *this - o; }
  QuadExt3& operator*=(const QuadExt3& o) { return *this = *this * o; }

  QuadExt3 pow(unsigned long e) const {
    QuadExt3 acc(BigRat(1));
    QuadExt3 base = *this;
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  friend bool operator==(const QuadExt3& x, const QuadExt3& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const QuadExt3& x, const QuadExt3& y) {
    return !(x == y);
  }

  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt3 decided by a^2 vs 3 b^2.
    // Equality cannot occur for nonzero a, b (sqrt3 is irrational).
    BigRat lhs = a_ * a_;
    BigRat rhs = BigRat(3) * b_ * b_;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
  }

  friend bool operator<(const QuadExt3& x, const QuadExt3& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const QuadExt3& x, const QuadExt3& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const QuadExt3& x, const QuadExt3& y) { return y < x; }
  friend bool operator>=(const QuadExt3& x, const QuadExt3& y) { return y <= x; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    if (!a_.is_zero()) out = a_.to_string();
    if (!b_.is_zero()) {
      if (!out.empty() && b_.sign() > 0) out += "+";
      if (b_ == BigRat(-1)) out += "-";
      else if (b_ != BigRat(1)) out += b_.to_string() + "*";
      out += "sqrt3";
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadExt3& q) {
    return os << q.to_string();
  }

 private:
  BigRat a_, b_;
};

}  // namespace supercodim
