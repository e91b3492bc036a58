#include "potts/classify.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace potts {
namespace {

constexpr double kPrefilterTolerance = 1e-9;

// Half-angle multiples (k1, k2) entering p = 1 + sin(k2*theta/2)/sin(k1*theta/2).
std::pair<long, long> series_half_multiples(Series series, long M) {
  if (series == Series::S2) return {2 * M + 1, 2 * M + 3};
  return {2 * M, 2 * M + 2};
}

void check_series_case(const ThetaParam& param, Series series) {
  const bool case1 = param.kase == CaseTag::Case1;
  if (series == Series::C2 && case1)
    throw std::invalid_argument("series C2 requires Case 2 (even n)");
  if (series != Series::C2 && !case1)
    throw std::invalid_argument("series S1/S2 require Case 1 (odd n)");
}

void check_series_index(const ThetaParam& param, Series series, long M) {
  check_series_case(param, series);
  const long m = param.m;
  const long lo = (series == Series::S2) ? 0 : 1;
  if (M < lo || M > m - 1)
    throw std::invalid_argument("series index M out of range");
}

// Exact termination labels per series, from the closed-form classification.
std::pair<long, long> termination_for(const ThetaParam& param, Series series,
                                      long M) {
  const long m = param.m;
  switch (series) {
    case Series::S1:
      return {2 * M, -2 * (m - M) + 1};
    case Series::S2:
      return {2 * M + 1, -2 * (m - M - 1)};
    case Series::C2:
      if (2 * M <= m - 1) return {2 * M, -m + 2 * M + 1};
      return {2 * M - m, -2 * (m - M) + 1};
  }
  throw std::logic_error("unreachable");
}

BoundarySolution make_solution(const SheetContext& ctx, Series series, long M) {
  const auto [k1, k2] = series_half_multiples(series, M);
  const CycloReal den = ctx.sin_half(k1);
  if (den.is_zero())
    throw std::logic_error("series denominator vanished; parameters invalid");
  CycloReal p = CycloReal::one(ctx.field_order()) + ctx.sin_half(k2) * den.invert();
  const double approx = p.to_double();
  const auto [pos, neg] = termination_for(ctx.param(), series, M);
  return BoundarySolution{series, M, std::move(p), approx, pos, neg, approx > 0.0};
}

bool series_matches_exact(const SheetContext& ctx, Series series, long M,
                          const BigRational& target) {
  // p == a/b  <=>  b*sin(k2*theta/2) - (a - b)*sin(k1*theta/2) == 0.
  const auto [k1, k2] = series_half_multiples(series, M);
  const BigRational b(target.denominator(), BigInt(1));
  const BigRational a_minus_b(target.numerator() - target.denominator(), BigInt(1));
  CycloReal expr = ctx.sin_half(k2) * b - ctx.sin_half(k1) * a_minus_b;
  return expr.is_zero();
}

bool series_matches_value(const SheetContext& ctx, Series series, long M,
                          const CycloReal& target) {
  const auto [k1, k2] = series_half_multiples(series, M);
  const CycloReal t_minus_1 = target - CycloReal::one(ctx.field_order());
  return (ctx.sin_half(k2) - t_minus_1 * ctx.sin_half(k1)).is_zero();
}

template <typename Fn>
void for_each_series_index(const ThetaParam& param, Fn&& fn) {
  const long m = param.m;
  if (param.kase == CaseTag::Case1) {
    for (long M = 1; M <= m - 1; ++M) fn(Series::S1, M);
    for (long M = 0; M <= m - 1; ++M) fn(Series::S2, M);
  } else {
    for (long M = 1; M <= m - 1; ++M) fn(Series::C2, M);
  }
}

double q_approx_for(const ThetaParam& param) {
  return 2.0 * (1.0 + std::cos(std::numbers::pi * param.n / param.m));
}

}  // namespace

std::string_view series_name(Series s) {
  switch (s) {
    case Series::S1: return "S1";
    case Series::S2: return "S2";
    case Series::C2: return "C2";
  }
  return "?";
}

std::vector<QEntry> allowed_q(unsigned max_m) {
  if (max_m < 2) throw std::invalid_argument("allowed_q: max_m must be >= 2");
  std::vector<QEntry> out;
  for (unsigned m = 2; m <= max_m; ++m) {
    for (unsigned n = 1; n < m; ++n) {
      if (std::gcd(n, m) != 1) continue;
      const ThetaParam param(n, m);
      const unsigned long order = 4ul * m;
      const CycloReal two(order, BigRational(2));
      CycloReal q = two + two * cos_pi(n, m);
      out.push_back(QEntry{param, std::move(q), q_approx_for(param)});
    }
  }
  return out;
}

std::vector<BoundarySolution> allowed_p(const ThetaParam& param) {
  const SheetContext ctx(param);
  std::vector<BoundarySolution> out;
  for_each_series_index(param, [&](Series series, long M) {
    out.push_back(make_solution(ctx, series, M));
  });
  // Distinct M give distinct exact p within a series.
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i].series == out[j].series && out[i].p == out[j].p)
        throw std::logic_error("duplicate p value within a series");
    }
  }
  return out;
}

std::optional<BoundarySolution> is_p_allowed(const ThetaParam& param,
                                             const BigRational& target) {
  const SheetContext ctx(param);
  std::optional<BoundarySolution> found;
  for_each_series_index(param, [&](Series series, long M) {
    if (found) return;
    if (series_matches_exact(ctx, series, M, target)) {
      const auto [pos, neg] = termination_for(param, series, M);
      found = BoundarySolution{series,
                               M,
                               ctx.lift(target),
                               target.to_double(),
                               pos,
                               neg,
                               target.sign() > 0};
    }
  });
  return found;
}

bool series_value_equals(const ThetaParam& param, Series series, long M,
                         const BigRational& target) {
  check_series_index(param, series, M);
  const SheetContext ctx(param);
  return series_matches_exact(ctx, series, M, target);
}

SpecialValuesReport special_values(const ThetaParam& param) {
  const SheetContext ctx(param);
  const long m = param.m;
  const bool case1 = param.kase == CaseTag::Case1;

  SpecialValuesReport r{param,
                        Placement{},
                        false,
                        std::nullopt,
                        false,
                        std::nullopt,
                        false,
                        Placement{},
                        false};

  if (case1) {
    r.p_equals_q = Placement{Series::S2, 0};
    r.p_equals_q_verified = series_matches_value(ctx, Series::S2, 0, ctx.q());

    r.p_equals_half_q = (m % 2 == 0) ? Placement{Series::S1, m / 2}
                                     : Placement{Series::S2, (m - 1) / 2};
    const BigRational half(1, 2);
    r.p_equals_half_q_verified = series_matches_value(
        ctx, r.p_equals_half_q->series, r.p_equals_half_q->M, ctx.q() * half);

    r.p_equals_two = (m % 2 == 1) ? Placement{Series::S1, (m - 1) / 2}
                                  : Placement{Series::S2, m / 2 - 1};
    r.p_equals_two_verified = series_matches_exact(
        ctx, r.p_equals_two->series, r.p_equals_two->M, BigRational(2));

    r.p_equals_one = Placement{Series::S1, m - 1};
    r.p_equals_one_verified =
        series_matches_exact(ctx, Series::S1, m - 1, BigRational(1));
  } else {
    r.p_equals_q = Placement{Series::C2, (m + 1) / 2};
    r.p_equals_q_verified =
        series_matches_value(ctx, Series::C2, (m + 1) / 2, ctx.q());

    // p = 2 and p = q/2 never occur in Case 2; verify by exhaustion.
    const BigRational half(1, 2);
    bool two_absent = true, half_q_absent = true;
    for (long M = 1; M <= m - 1; ++M) {
      if (series_matches_exact(ctx, Series::C2, M, BigRational(2)))
        two_absent = false;
      if (series_matches_value(ctx, Series::C2, M, ctx.q() * half))
        half_q_absent = false;
    }
    r.p_equals_two_verified = two_absent;
    r.p_equals_half_q_verified = half_q_absent;

    r.p_equals_one = Placement{Series::C2, m - 1};
    r.p_equals_one_verified =
        series_matches_exact(ctx, Series::C2, m - 1, BigRational(1));
  }
  return r;
}

ScanResult scan_integer_p(unsigned max_m, long target, unsigned jobs,
                          bool prefilter) {
  if (max_m < 2)
    throw std::invalid_argument("scan_integer_p: max_m must be >= 2");
  if (target < 2)
    throw std::invalid_argument("scan_integer_p: target must be >= 2");
  if (jobs == 0) jobs = 1;

  std::vector<ThetaParam> pairs;
  for (unsigned m = 2; m <= max_m; ++m) {
    for (unsigned n = 1; n < m; ++n) {
      if (std::gcd(n, m) == 1) pairs.emplace_back(n, m);
    }
  }

  std::vector<std::vector<ScanHit>> hit_slots(pairs.size());
  std::vector<std::size_t> tested_slots(pairs.size(), 0);

  const BigRational target_rat(target);
  auto scan_pair = [&](std::size_t idx) {
    const ThetaParam& param = pairs[idx];
    const double theta = std::numbers::pi * param.n / param.m;
    const double tm1 = static_cast<double>(target - 1);
    std::optional<SheetContext> ctx;  // built lazily: most pairs never need it
    std::size_t tested = 0;
    for_each_series_index(param, [&](Series series, long M) {
      ++tested;
      if (prefilter) {
        const auto [k1, k2] = series_half_multiples(series, M);
        const double residual = std::sin(0.5 * k2 * theta) -
                                tm1 * std::sin(0.5 * k1 * theta);
        if (std::abs(residual) >= kPrefilterTolerance) return;
      }
      if (!ctx) ctx.emplace(param);
      if (series_matches_exact(*ctx, series, M, target_rat)) {
        hit_slots[idx].push_back(
            ScanHit{param, series, M, q_approx_for(param)});
      }
    });
    tested_slots[idx] = tested;
  };

  if (jobs == 1 || pairs.size() < 2) {
    for (std::size_t i = 0; i < pairs.size(); ++i) scan_pair(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    const unsigned count = std::min<std::size_t>(jobs, pairs.size());
    workers.reserve(count);
    for (unsigned w = 0; w < count; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < pairs.size();
             i = next.fetch_add(1)) {
          scan_pair(i);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  ScanResult result{max_m, target, {}, pairs.size(), 0};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    result.candidates_tested += tested_slots[i];
    for (auto& h : hit_slots[i]) result.hits.push_back(std::move(h));
  }
  return result;
}

}  // namespace potts
