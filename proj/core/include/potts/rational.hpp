#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace potts {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Zero is 0/1.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(static_cast<signed long>(n)) {}        // NOLINT
  BigRational(long long n) : v_(static_cast<signed long>(n)) {}   // NOLINT
  BigRational(int n) : v_(n) {}                                   // NOLINT
  explicit BigRational(const BigInt& n) : v_(n) {}
  BigRational(long num, long den) {
    if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
    v_ = mpq_class(BigInt(num), BigInt(den));
    v_.canonicalize();
  }
  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit BigRational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "a/b" or "a"; throws std::invalid_argument on malformed input
  /// or zero denominator.
  static BigRational from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0)
      throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    if (v.get_den() == 0)
      throw std::invalid_argument("BigRational: zero denominator in '" + s + "'");
    v.canonicalize();
    return BigRational(std::move(v));
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  double to_double() const { return v_.get_d(); }
  std::string str() const { return v_.get_str(); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

inline BigRational abs(const BigRational& r) {
  return r.sign() < 0 ? -r : r;
}

}  // namespace potts
