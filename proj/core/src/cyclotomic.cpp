#include "potts/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace potts {
namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Schoolbook product; fine up to the Karatsuba threshold.
QPoly mul_schoolbook(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

constexpr std::size_t kKaratsubaThreshold = 128;

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= kKaratsubaThreshold)
    return mul_schoolbook(a, b);

  const std::size_t h = std::max(a.size(), b.size()) / 2;
  const QPoly a0(a.begin(), a.begin() + std::min(h, a.size()));
  const QPoly a1(a.begin() + std::min(h, a.size()), a.end());
  const QPoly b0(b.begin(), b.begin() + std::min(h, b.size()));
  const QPoly b1(b.begin() + std::min(h, b.size()), b.end());

  QPoly z0 = mul(a0, b0);
  QPoly z2 = mul(a1, b1);
  QPoly sa = a0;
  sa.resize(std::max(a0.size(), a1.size()), mpq_class(0));
  for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
  QPoly sb = b0;
  sb.resize(std::max(b0.size(), b1.size()), mpq_class(0));
  for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
  QPoly z1 = mul(sa, sb);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

  QPoly r(a.size() + b.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < z0.size(); ++i) r[i] += z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) r[i + h] += z1[i];
  for (std::size_t i = 0; i < z2.size(); ++i) r[i + 2 * h] += z2[i];
  trim(r);
  return r;
}

// In-place residue modulo the monic integer polynomial phi.
void reduce_mod(QPoly& v, const std::vector<BigInt>& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    if (v[i] == 0) continue;
    mpq_class c;
    swap(c, v[i]);
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) v[i - deg + j] -= c * phi[j];
    }
  }
  v.resize(deg);
}

// Quotient/remainder against a non-zero divisor with rational coefficients.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
  QPoly q(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0,
          mpq_class(0));
  const mpq_class& lead = den.back();
  for (std::size_t i = num.size(); i-- > den.size() - 1;) {
    if (num[i] == 0) continue;
    mpq_class f = num[i] / lead;
    q[i - (den.size() - 1)] = f;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[i - (den.size() - 1) + j] -= f * den[j];
  }
  trim(num);
  return {std::move(q), std::move(num)};
}

std::vector<unsigned long> distinct_prime_factors(unsigned long n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

using IPoly = std::vector<BigInt>;

// p *= (z^k - 1)
void mul_binomial(IPoly& p, unsigned long k) {
  IPoly r(p.size() + k, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + k] += p[i];
    r[i] -= p[i];
  }
  p = std::move(r);
}

// p /= (z^k - 1), exact by construction in the Moebius product below.
void div_binomial(IPoly& p, unsigned long k) {
  IPoly q(p.size() - k, BigInt(0));
  for (std::size_t i = p.size(); i-- > k;) {
    BigInt qi = p[i] + (i < q.size() ? q[i] : BigInt(0));
    q[i - k] = qi;
  }
  p = std::move(q);
}

IPoly compute_cyclotomic(unsigned long n) {
  if (n == 1) return {BigInt(-1), BigInt(1)};  // z - 1
  // Phi_n(z) = prod over squarefree d | n of (z^{n/d} - 1)^{mu(d)}.
  const auto primes = distinct_prime_factors(n);
  std::vector<unsigned long> mul_ks, div_ks;
  const std::size_t subsets = 1ull << primes.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    unsigned long d = 1;
    bool negative = false;
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask & (1ull << i)) {
        d *= primes[i];
        negative = !negative;
      }
    }
    (negative ? div_ks : mul_ks).push_back(n / d);
  }
  IPoly p{BigInt(1)};
  for (unsigned long k : mul_ks) mul_binomial(p, k);
  for (unsigned long k : div_ks) div_binomial(p, k);
  return p;
}

const IPoly& cyclotomic_cached(unsigned long n) {
  static std::mutex mu;
  static std::map<unsigned long, std::unique_ptr<const IPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<const IPoly>(compute_cyclotomic(n)))
             .first;
  }
  return *it->second;
}

QPoly to_workspace(const std::vector<BigRational>& v) {
  QPoly w;
  w.reserve(v.size());
  for (const auto& c : v) w.push_back(c.value());
  return w;
}

std::vector<BigRational> from_workspace(QPoly&& w, std::size_t size) {
  std::vector<BigRational> v;
  v.reserve(size);
  for (std::size_t i = 0; i < size; ++i)
    v.emplace_back(i < w.size() ? std::move(w[i]) : mpq_class(0));
  return v;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(unsigned long n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
  return cyclotomic_cached(n);
}

CycloNumber::CycloNumber(unsigned long order) : order_(order) {
  if (order == 0) throw std::invalid_argument("CycloNumber: order must be >= 1");
  coeffs_.assign(euler_phi(order), BigRational(0));
}

CycloNumber CycloNumber::from_rational(unsigned long order, const BigRational& r) {
  CycloNumber x(order);
  x.coeffs_[0] = r;
  return x;
}

CycloNumber CycloNumber::root_of_unity(unsigned long order, long long k) {
  const std::pair<long long, BigRational> term{k, BigRational(1)};
  return from_terms(order, {&term, 1});
}

CycloNumber CycloNumber::from_terms(
    unsigned long order, std::span<const std::pair<long long, BigRational>> terms) {
  CycloNumber x(order);
  QPoly raw(order, mpq_class(0));
  const long long n = static_cast<long long>(order);
  for (const auto& [e, c] : terms) {
    long long r = e % n;
    if (r < 0) r += n;
    raw[static_cast<std::size_t>(r)] += c.value();
  }
  reduce_mod(raw, cyclotomic_cached(order));
  x.coeffs_ = from_workspace(std::move(raw), x.coeffs_.size());
  return x;
}

bool CycloNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigRational& c) { return c.is_zero(); });
}

std::optional<BigRational> CycloNumber::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return std::nullopt;
  }
  return coeffs_[0];
}

std::complex<double> CycloNumber::to_complex() const {
  std::complex<double> sum(0.0, 0.0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    sum += coeffs_[j].to_double() *
           std::polar(1.0, step * static_cast<double>(j));
  }
  return sum;
}

CycloNumber CycloNumber::conjugate() const {
  std::vector<std::pair<long long, BigRational>> terms;
  terms.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero())
      terms.emplace_back(-static_cast<long long>(j), coeffs_[j]);
  }
  return from_terms(order_, terms);
}

CycloNumber CycloNumber::embed(unsigned long target_order) const {
  if (target_order % order_ != 0)
    throw std::invalid_argument("CycloNumber::embed: order must divide target");
  if (target_order == order_) return *this;
  const unsigned long scale = target_order / order_;
  std::vector<std::pair<long long, BigRational>> terms;
  terms.reserve(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero())
      terms.emplace_back(static_cast<long long>(j * scale), coeffs_[j]);
  }
  return from_terms(target_order, terms);
}

CycloNumber CycloNumber::invert() const {
  if (is_zero()) throw std::domain_error("CycloNumber::invert: zero element");
  const IPoly& phi = cyclotomic_cached(order_);
  QPoly r0(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) r0[i] = mpq_class(phi[i]);
  QPoly r1 = to_workspace(coeffs_);
  trim(r1);
  // Extended Euclid tracking only the coefficient of the input element.
  QPoly t0, t1{mpq_class(1)};
  while (!r1.empty()) {
    auto [q, rem] = divmod(std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly qt = mul(q, t1);
    QPoly next = std::move(t0);
    next.resize(std::max(next.size(), qt.size()), mpq_class(0));
    for (std::size_t i = 0; i < qt.size(); ++i) next[i] -= qt[i];
    trim(next);
    t0 = std::move(t1);
    t1 = std::move(next);
  }
  // r0 is a non-zero constant: the cyclotomic polynomial is irreducible.
  const mpq_class c = r0[0];
  for (auto& t : t0) t /= c;
  reduce_mod(t0, phi);
  CycloNumber out(order_);
  out.coeffs_ = from_workspace(std::move(t0), out.coeffs_.size());
  return out;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

void CycloNumber::check_same_order(const CycloNumber& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("CycloNumber: operands have different orders");
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  check_same_order(o);
  QPoly a = to_workspace(coeffs_);
  QPoly b = to_workspace(o.coeffs_);
  trim(a);
  trim(b);
  QPoly r = mul(a, b);
  if (r.size() >= coeffs_.size() + 1) {
    reduce_mod(r, cyclotomic_cached(order_));
  }
  coeffs_ = from_workspace(std::move(r), coeffs_.size());
  return *this;
}

CycloNumber& CycloNumber::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycloReal::CycloReal(CycloNumber v) : value_(std::move(v)) {
  if (value_ != value_.conjugate())
    throw std::invalid_argument("CycloReal: value is not self-conjugate");
}

CycloReal sin_pi(long long a, unsigned long b) {
  if (b == 0) throw std::invalid_argument("sin_pi: denominator must be >= 1");
  const unsigned long order = 4 * b;
  const long long bb = static_cast<long long>(b);
  const std::pair<long long, BigRational> terms[] = {
      {bb + 2 * a, BigRational(-1, 2)},
      {bb - 2 * a, BigRational(1, 2)},
  };
  return CycloReal(CycloNumber::from_terms(order, terms));
}

CycloReal cos_pi(long long a, unsigned long b) {
  if (b == 0) throw std::invalid_argument("cos_pi: denominator must be >= 1");
  const unsigned long order = 4 * b;
  const std::pair<long long, BigRational> terms[] = {
      {2 * a, BigRational(1, 2)},
      {-2 * a, BigRational(1, 2)},
  };
  return CycloReal(CycloNumber::from_terms(order, terms));
}

}  // namespace potts
