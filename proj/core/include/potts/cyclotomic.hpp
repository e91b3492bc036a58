#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "potts/rational.hpp"

namespace potts {

/// Euler totient by trial factorization.
unsigned long euler_phi(unsigned long n);

/// Coefficients of the N-th cyclotomic polynomial, constant term first,
/// leading (monic) coefficient last. Degree is euler_phi(N).
const std::vector<BigInt>& cyclotomic_polynomial(unsigned long n);

/// Element of the cyclotomic field Q(zeta_N), zeta_N = exp(2*pi*i/N),
/// stored as the canonical residue modulo the N-th cyclotomic polynomial:
/// a coefficient vector for zeta^0 .. zeta^{phi(N)-1}. The representation
/// is unique, so the zero test is coefficient-wise.
///
/// Binary arithmetic requires both operands to live in the same order;
/// embed() moves a value into any multiple of its order.
class CycloNumber {
 public:
  explicit CycloNumber(unsigned long order);  // zero of the given order

  static CycloNumber from_rational(unsigned long order, const BigRational& r);
  /// zeta_N^k, any integer exponent (reduced mod N).
  static CycloNumber root_of_unity(unsigned long order, long long k);
  /// Sum of coeff * zeta_N^exponent terms; exponents may repeat or be negative.
  static CycloNumber from_terms(
      unsigned long order,
      std::span<const std::pair<long long, BigRational>> terms);

  unsigned long order() const { return order_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// The rational value when all non-constant coefficients vanish.
  std::optional<BigRational> as_rational() const;
  /// Double-precision evaluation via zeta_N -> exp(2*pi*i/N); accurate to
  /// 1e-10 for orders <= 1000 and small coefficients. Exact decisions never
  /// go through this path.
  std::complex<double> to_complex() const;

  CycloNumber conjugate() const;
  /// Same complex value in Q(zeta_target); order() must divide target.
  CycloNumber embed(unsigned long target_order) const;
  /// Multiplicative inverse; throws std::domain_error on zero.
  CycloNumber invert() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a *= b.invert(); }

  CycloNumber& operator*=(const BigRational& s);
  friend CycloNumber operator*(CycloNumber a, const BigRational& s) { return a *= s; }
  friend CycloNumber operator*(const BigRational& s, CycloNumber a) { return a *= s; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

 private:
  void check_same_order(const CycloNumber& o) const;

  unsigned long order_;
  std::vector<BigRational> coeffs_;
};

/// Real element of a cyclotomic field: equal to its own conjugate.
/// Construction checks the invariant exactly.
class CycloReal {
 public:
  explicit CycloReal(CycloNumber v);
  CycloReal(unsigned long order, const BigRational& r)
      : value_(CycloNumber::from_rational(order, r)) {}

  static CycloReal zero(unsigned long order) { return CycloReal(order, BigRational(0)); }
  static CycloReal one(unsigned long order) { return CycloReal(order, BigRational(1)); }

  const CycloNumber& value() const { return value_; }
  unsigned long order() const { return value_.order(); }

  bool is_zero() const { return value_.is_zero(); }
  std::optional<BigRational> as_rational() const { return value_.as_rational(); }
  double to_double() const { return value_.to_complex().real(); }

  CycloReal embed(unsigned long target_order) const { return CycloReal(value_.embed(target_order)); }
  CycloReal invert() const { return CycloReal(value_.invert()); }

  CycloReal operator-() const { return CycloReal(-value_); }
  CycloReal& operator+=(const CycloReal& o) { value_ += o.value_; return *this; }
  CycloReal& operator-=(const CycloReal& o) { value_ -= o.value_; return *this; }
  CycloReal& operator*=(const CycloReal& o) { value_ *= o.value_; return *this; }
  CycloReal& operator*=(const BigRational& s) { value_ *= s; return *this; }

  friend CycloReal operator+(CycloReal a, const CycloReal& b) { return a += b; }
  friend CycloReal operator-(CycloReal a, const CycloReal& b) { return a -= b; }
  friend CycloReal operator*(CycloReal a, const CycloReal& b) { return a *= b; }
  friend CycloReal operator/(CycloReal a, const CycloReal& b) { return a *= b.invert(); }
  friend CycloReal operator*(CycloReal a, const BigRational& s) { return a *= s; }
  friend CycloReal operator*(const BigRational& s, CycloReal a) { return a *= s; }

  friend bool operator==(const CycloReal& a, const CycloReal& b) { return a.value_ == b.value_; }
  friend bool operator!=(const CycloReal& a, const CycloReal& b) { return !(a == b); }

 private:
  CycloNumber value_;
};

/// Exact sin(a*pi/b) as an element of Q(zeta_{4b}).
CycloReal sin_pi(long long a, unsigned long b);
/// Exact cos(a*pi/b) as an element of Q(zeta_{4b}).
CycloReal cos_pi(long long a, unsigned long b);

}  // namespace potts
