#pragma once

// Exact scalar arithmetic: arbitrary-precision integers and rationals.
// Thin value-type wrappers over GMP; every rational is kept in lowest
// terms with a positive denominator, so operator== is structural equality.

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace supercodim {

using BigInt = mpz_class;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("rational division by zero") {}
};

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

class BigRat {
 public:
  BigRat() : v_(0) {}
  BigRat(int n) : v_(n) {}
  BigRat(long n) : v_(static_cast<signed long>(n)) {}
  BigRat(const BigInt& n) : v_(n) {}
  BigRat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}

  // Accepts "p", "-p", or "p/q" with optional sign; q must be nonzero.
  static BigRat parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return BigRat(BigInt(s));
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      return BigRat(num, den);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("not a rational literal: '" + s + "'");
    }
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  BigRat operator-() const { return BigRat(mpq_class(-v_)); }
  BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
  BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
  BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

  BigRat inverse() const {
    if (is_zero()) throw DivisionByZero();
    return BigRat(1) / *this;
  }

  BigRat pow(unsigned long e) const {
    return BigRat(int_pow(numerator(), e), int_pow(denominator(), e));
  }

  std::string to_string() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const BigRat& r) {
    return os << r.v_;
  }

 private:
  explicit BigRat(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline BigRat rat_pow(const BigRat& b, unsigned long e) { return b.pow(e); }

}  // namespace supercodim
