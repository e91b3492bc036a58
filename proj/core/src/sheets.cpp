#include "potts/sheets.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace potts {

ThetaParam::ThetaParam(unsigned n_, unsigned m_) : n(n_), m(m_) {
  if (n == 0 || n >= m)
    throw std::invalid_argument("ThetaParam: need 0 < n < m");
  if (std::gcd(n, m) != 1)
    throw std::invalid_argument("ThetaParam: n and m must be coprime");
  kase = (n % 2 == 1) ? CaseTag::Case1 : CaseTag::Case2;
}

SheetKind sheet_kind_for_label(long label) {
  const bool even = (label % 2 == 0);
  if (label >= 1) return even ? SheetKind::Rho : SheetKind::Delta;
  return even ? SheetKind::Delta : SheetKind::Rho;
}

SheetCoefficientTable::SheetCoefficientTable(ThetaParam param, CycloReal p,
                                             long lo, long hi,
                                             std::vector<SheetEntry> entries)
    : param_(param), p_(std::move(p)), lo_(lo), hi_(hi), entries_(std::move(entries)) {
  if (lo_ > hi_) throw std::invalid_argument("SheetCoefficientTable: lo > hi");
  if (entries_.size() != static_cast<std::size_t>(hi_ - lo_ + 1))
    throw std::invalid_argument("SheetCoefficientTable: entry count mismatch");
}

const SheetEntry& SheetCoefficientTable::at(long label) const {
  if (label < lo_ || label > hi_)
    throw std::out_of_range("SheetCoefficientTable: label " + std::to_string(label));
  return entries_[static_cast<std::size_t>(label - lo_)];
}

SheetContext::SheetContext(ThetaParam param)
    : param_(param), order_(4ul * param.m), q_(CycloReal::zero(order_)) {
  const CycloReal two(order_, BigRational(2));
  q_ = two + two * cos_half(2);
}

const SheetContext::Inverses& SheetContext::inverses() const {
  std::call_once(inverses_once_, [&] {
    const CycloReal two(order_, BigRational(2));
    inverses_ = std::make_unique<const Inverses>(Inverses{
        sin_half(2).invert(),
        sin_half(1).invert(),
        (two * sin_half(1) * sin_half(2)).invert(),
    });
  });
  return *inverses_;
}

CycloReal SheetContext::sin_half(long long k) const {
  const long long m = param_.m;
  const long long kn = k * static_cast<long long>(param_.n);
  const std::pair<long long, BigRational> terms[] = {
      {m + kn, BigRational(-1, 2)},
      {m - kn, BigRational(1, 2)},
  };
  return CycloReal(CycloNumber::from_terms(order_, terms));
}

CycloReal SheetContext::cos_half(long long k) const {
  const long long kn = k * static_cast<long long>(param_.n);
  const std::pair<long long, BigRational> terms[] = {
      {kn, BigRational(1, 2)},
      {-kn, BigRational(1, 2)},
  };
  return CycloReal(CycloNumber::from_terms(order_, terms));
}

CycloReal SheetContext::rho_pos(const CycloReal& p, long M) const {
  const CycloReal one_minus_p = CycloReal::one(order_) - p;
  return (one_minus_p * sin_half(2 * M) + sin_half(2 * M + 2)) * inverses().sin_theta;
}

CycloReal SheetContext::delta_pos(const CycloReal& p, long M) const {
  const CycloReal one_minus_p = CycloReal::one(order_) - p;
  return -((one_minus_p * sin_half(2 * M + 1) + sin_half(2 * M + 3)) *
           inverses().sin_half_theta);
}

CycloReal SheetContext::rho_neg(const CycloReal& p, long M) const {
  const CycloReal one_minus_p = CycloReal::one(order_) - p;
  return (one_minus_p * sin_half(2 * M + 2) + sin_half(2 * M)) * inverses().sin_theta;
}

CycloReal SheetContext::delta_neg(const CycloReal& p, long M) const {
  const CycloReal one_minus_p = CycloReal::one(order_) - p;
  return -((one_minus_p * sin_half(2 * M + 1) + sin_half(2 * M - 1)) *
           inverses().sin_half_theta);
}

CycloReal SheetContext::alpha(const CycloReal& p, long K) const {
  if (K % 2 == 0) return alpha(p, K - 1);
  const long M = (K - 1) / 2;
  const CycloReal two(order_, BigRational(2));
  const CycloReal num = -((p - two) * cos_half(1)) +
                        (p - CycloReal::one(order_)) * cos_half(2 * M + 1) -
                        cos_half(2 * M + 3);
  return num * inverses().alpha_denom;
}

std::pair<CycloReal, CycloReal> SheetContext::p1_closed_forms(long k) const {
  const long long e = 2ll * param_.n;  // x = e^{i theta} = zeta_{4m}^{2n}
  const CycloNumber one = CycloNumber::from_rational(order_, BigRational(1));
  const auto xpow = [&](long long j) {
    return CycloNumber::root_of_unity(order_, e * j);
  };

  // rho_{2k} = x^{-(k+1)} (x^{2(k+1)} - 1) / sqrt(q(q-4)),
  // with sqrt(q(q-4)) taken as 2i sin(theta).
  const CycloNumber imag_unit = CycloNumber::root_of_unity(order_, param_.m);
  const CycloNumber sqrt_q_qm4 =
      BigRational(2) * imag_unit * sin_half(2).value();
  const CycloNumber rho_num = xpow(-(k + 1)) * (xpow(2 * (k + 1)) - one);
  const CycloReal rho(rho_num * sqrt_q_qm4.invert());

  // delta_{2k} = x^{-(k+1)} (x - 1)(x^{2k+1} - 1) / (q - 4),
  // with q - 4 = -4 sin^2(theta/2).
  const CycloNumber q_minus_4 =
      BigRational(-4) * (sin_half(1) * sin_half(1)).value();
  const CycloNumber delta_num =
      xpow(-(k + 1)) * (xpow(1) - one) * (xpow(2 * k + 1) - one);
  const CycloReal delta(delta_num * q_minus_4.invert());

  return {rho, delta};
}

std::array<CycloNumber, 3> SheetContext::characteristic_roots() const {
  const long long e = 2ll * param_.n;
  return {CycloNumber::from_rational(order_, BigRational(1)),
          CycloNumber::root_of_unity(order_, e),
          CycloNumber::root_of_unity(order_, -e)};
}

std::array<CycloNumber, 3> characteristic_roots(const CycloReal& q,
                                                const ThetaParam& param) {
  SheetContext ctx(param);
  const unsigned long target = std::lcm(q.order(), ctx.field_order());
  if (q.value().embed(target) != ctx.q().value().embed(target))
    throw std::invalid_argument("characteristic_roots: q does not match theta");
  return ctx.characteristic_roots();
}

std::optional<TerminationLabels> SheetContext::termination_labels(
    const CycloReal& p) const {
  const long m = param_.m;
  std::optional<long> pos, neg;
  // One period covers every distinct coefficient magnitude on each side.
  for (long label = 1; label <= 2 * m; ++label) {
    const CycloReal v = (label % 2 == 0) ? rho_pos(p, label / 2)
                                         : delta_pos(p, (label - 1) / 2);
    if (v.is_zero()) {
      pos = label;
      break;
    }
  }
  if (!pos) return std::nullopt;
  for (long label = 0; label > -2 * m; --label) {
    const CycloReal v = (label % 2 == 0) ? delta_neg(p, -label / 2)
                                         : rho_neg(p, (-label - 1) / 2);
    if (v.is_zero()) {
      neg = label;
      break;
    }
  }
  if (!neg) return std::nullopt;
  return TerminationLabels{*pos, *neg};
}

SheetCoefficientTable SheetContext::closed_form_table(const CycloReal& p,
                                                      LabelRange range) const {
  if (range.lo > range.hi)
    throw std::invalid_argument("closed_form_table: empty label range");
  std::vector<SheetEntry> entries;
  entries.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
  for (long label = range.lo; label <= range.hi; ++label) {
    const SheetKind kind = sheet_kind_for_label(label);
    CycloReal value = CycloReal::zero(order_);
    if (label >= 1) {
      value = (label % 2 == 0) ? rho_pos(p, label / 2)
                               : delta_pos(p, (label - 1) / 2);
    } else {
      value = (label % 2 == 0) ? delta_neg(p, -label / 2)
                               : rho_neg(p, (-label - 1) / 2);
    }
    entries.push_back(SheetEntry{kind, std::move(value), alpha(p, label)});
  }
  return SheetCoefficientTable(param_, p, range.lo, range.hi, std::move(entries));
}

std::vector<CycloReal> recurrence_chain(const CycloReal& q,
                                        std::array<CycloReal, 3> seeds,
                                        std::size_t count) {
  std::vector<CycloReal> chain;
  chain.reserve(std::max<std::size_t>(count, 3));
  const CycloReal q_minus_1 = q - CycloReal::one(q.order());
  chain.push_back(std::move(seeds[0]));
  chain.push_back(std::move(seeds[1]));
  chain.push_back(std::move(seeds[2]));
  while (chain.size() < count) {
    const std::size_t t = chain.size();
    chain.push_back(q_minus_1 * (chain[t - 1] - chain[t - 2]) + chain[t - 3]);
  }
  chain.resize(std::min<std::size_t>(count, chain.size()),
               CycloReal::zero(q.order()));
  return chain;
}

SheetCoefficientTable SheetContext::recurrence_table(const CycloReal& p,
                                                     LabelRange range) const {
  if (range.lo > range.hi)
    throw std::invalid_argument("recurrence_table: empty label range");

  // Eight independent parity chains, each seeded from the closed forms at
  // the three labels nearest zero and extended away from the physical sheet.
  const auto chain = [&](auto&& seed_fn, std::size_t count) {
    std::array<CycloReal, 3> seeds{seed_fn(0), seed_fn(1), seed_fn(2)};
    return recurrence_chain(q_, std::move(seeds), count);
  };

  const long hi = std::max(range.hi, 0l);
  const long lo = std::min(range.lo, 0l);
  // t-th element sits at label 2t / 2t+1 (positive side) or -2t / -2t-1.
  const auto rho_pos_chain =
      chain([&](long t) { return rho_pos(p, t); }, hi / 2 + 1);
  const auto delta_pos_chain =
      chain([&](long t) { return delta_pos(p, t); }, (hi + 1) / 2 + 1);
  const auto alpha_odd_pos_chain =
      chain([&](long t) { return alpha(p, 2 * t + 1); }, (hi + 1) / 2 + 1);
  const auto alpha_even_pos_chain =
      chain([&](long t) { return alpha(p, 2 * t + 2); }, hi / 2 + 1);
  const auto delta_neg_chain =
      chain([&](long t) { return delta_neg(p, t); }, (-lo) / 2 + 1);
  const auto rho_neg_chain =
      chain([&](long t) { return rho_neg(p, t); }, (-lo + 1) / 2 + 1);
  const auto alpha_even_neg_chain =
      chain([&](long t) { return alpha(p, -2 * t); }, (-lo) / 2 + 1);
  const auto alpha_odd_neg_chain =
      chain([&](long t) { return alpha(p, -2 * t - 1); }, (-lo + 1) / 2 + 1);

  std::vector<SheetEntry> entries;
  entries.reserve(static_cast<std::size_t>(range.hi - range.lo + 1));
  for (long label = range.lo; label <= range.hi; ++label) {
    const SheetKind kind = sheet_kind_for_label(label);
    CycloReal value = CycloReal::zero(order_);
    CycloReal a = CycloReal::zero(order_);
    if (label >= 1) {
      if (label % 2 == 0) {
        value = rho_pos_chain[static_cast<std::size_t>(label / 2)];
        a = alpha_even_pos_chain[static_cast<std::size_t>(label / 2 - 1)];
      } else {
        value = delta_pos_chain[static_cast<std::size_t>((label - 1) / 2)];
        a = alpha_odd_pos_chain[static_cast<std::size_t>((label - 1) / 2)];
      }
    } else {
      if (label % 2 == 0) {
        value = delta_neg_chain[static_cast<std::size_t>(-label / 2)];
        a = alpha_even_neg_chain[static_cast<std::size_t>(-label / 2)];
      } else {
        value = rho_neg_chain[static_cast<std::size_t>((-label - 1) / 2)];
        a = alpha_odd_neg_chain[static_cast<std::size_t>((-label - 1) / 2)];
      }
    }
    entries.push_back(SheetEntry{kind, std::move(value), std::move(a)});
  }
  return SheetCoefficientTable(param_, p, range.lo, range.hi, std::move(entries));
}

}  // namespace potts
