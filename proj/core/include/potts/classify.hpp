#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "potts/sheets.hpp"

namespace potts {

/// One allowed q value: q = 2(1 + cos(n*pi/m)) for coprime 0 < n < m.
struct QEntry {
  ThetaParam param;
  CycloReal q;
  double q_approx;
};

/// All allowed q with m <= max_m, sorted by (m, n). Requires max_m >= 2.
std::vector<QEntry> allowed_q(unsigned max_m);

/// Solution series. S1 terminates on a finite cut, S2 on an infinite cut
/// (both Case 1); C2 is the single Case 2 series.
enum class Series { S1, S2, C2 };

std::string_view series_name(Series s);

/// One allowed boundary weight p for a given theta.
struct BoundarySolution {
  Series series;
  long M;
  CycloReal p;
  double p_approx;
  long termination_pos;
  long termination_neg;
  bool physical;  // p_approx > 0
};

/// The full solution list for a parameter: Case 1 yields S1 (M = 1..m-1)
/// and S2 (M = 0..m-1); Case 2 yields C2 (M = 1..m-1). Non-positive p
/// values are kept and flagged non-physical.
std::vector<BoundarySolution> allowed_p(const ThetaParam& param);

/// Exact membership test for a rational p; empty when the value does not
/// appear in any series.
std::optional<BoundarySolution> is_p_allowed(const ThetaParam& param,
                                             const BigRational& target);

/// Exact test of p_series(M) == target without constructing p: the series
/// equation is cleared of its denominator so the check stays in the ring.
bool series_value_equals(const ThetaParam& param, Series series, long M,
                         const BigRational& target);

struct Placement {
  Series series;
  long M;
};

/// Exact placements of the special boundary values. Absent optional means
/// the value does not occur for this parameter (verified exhaustively).
struct SpecialValuesReport {
  ThetaParam param;
  Placement p_equals_q;
  bool p_equals_q_verified;
  std::optional<Placement> p_equals_half_q;  // Case 1 only
  bool p_equals_half_q_verified;
  std::optional<Placement> p_equals_two;  // Case 1 only
  bool p_equals_two_verified;
  Placement p_equals_one;
  bool p_equals_one_verified;
};

SpecialValuesReport special_values(const ThetaParam& param);

struct ScanHit {
  ThetaParam param;
  Series series;
  long M;
  double q_approx;
};

struct ScanResult {
  unsigned max_m;
  long target;
  std::vector<ScanHit> hits;
  std::size_t pairs_scanned;
  std::size_t candidates_tested;
};

/// Tests p == target over every coprime (n, m) with m <= max_m and every
/// series index. A double-precision prefilter (tolerance 1e-9) may discard
/// clear misses; every reported hit is confirmed exactly. Results are
/// sorted by (m, n, series, M) independent of the worker count.
ScanResult scan_integer_p(unsigned max_m, long target, unsigned jobs = 1,
                          bool prefilter = true);

}  // namespace potts
