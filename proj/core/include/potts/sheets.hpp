#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "potts/cyclotomic.hpp"

namespace potts {

enum class CaseTag { Case1, Case2 };

/// The angle theta = n*pi/m behind an allowed q value. Case 1 covers odd n
/// (2m-sheeted structure, two solution series), Case 2 even n (m sheets,
/// one series; coprimality then forces m odd).
struct ThetaParam {
  unsigned n = 1;
  unsigned m = 2;
  CaseTag kase = CaseTag::Case1;

  ThetaParam(unsigned n_, unsigned m_);

  friend bool operator==(const ThetaParam& a, const ThetaParam& b) {
    return a.n == b.n && a.m == b.m;
  }
};

enum class SheetKind { Rho, Delta };

/// Kind of the coefficient stored at a sheet label: the cut leaving the
/// sheet away from the physical sheet. Positive labels alternate starting
/// from the finite cut between sheets 0 and 1; non-positive labels descend
/// starting with an infinite cut.
SheetKind sheet_kind_for_label(long label);

struct SheetEntry {
  SheetKind kind;
  CycloReal value;
  CycloReal alpha;
};

/// Discontinuity and linear-term coefficients over a contiguous range of
/// sheet labels for a fixed (theta, p).
class SheetCoefficientTable {
 public:
  SheetCoefficientTable(ThetaParam param, CycloReal p, long lo, long hi,
                        std::vector<SheetEntry> entries);

  const ThetaParam& param() const { return param_; }
  const CycloReal& p() const { return p_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  const SheetEntry& at(long label) const;

 private:
  ThetaParam param_;
  CycloReal p_;
  long lo_, hi_;
  std::vector<SheetEntry> entries_;
};

struct TerminationLabels {
  long positive;  // smallest positive label whose coefficient vanishes
  long negative;  // largest non-positive label whose coefficient vanishes

  friend bool operator==(const TerminationLabels&, const TerminationLabels&) = default;
};

struct LabelRange {
  long lo;
  long hi;
};

/// Exact evaluation context for one theta = n*pi/m. Everything lives in
/// the single field Q(zeta_{4m}): each angle that appears is an integer
/// multiple of theta/2 = n*pi/(2m).
class SheetContext {
 public:
  explicit SheetContext(ThetaParam param);

  const ThetaParam& param() const { return param_; }
  unsigned long field_order() const { return order_; }

  /// q = 2(1 + cos theta).
  const CycloReal& q() const { return q_; }

  /// sin(k * theta/2) and cos(k * theta/2), any integer k.
  CycloReal sin_half(long long k) const;
  CycloReal cos_half(long long k) const;

  /// Embeds a rational p into the context field.
  CycloReal lift(const BigRational& r) const { return CycloReal(order_, r); }

  /// Coefficient of the finite cut leaving sheet 2M upward.
  CycloReal rho_pos(const CycloReal& p, long M) const;
  /// Coefficient of the infinite cut leaving sheet 2M+1 upward.
  CycloReal delta_pos(const CycloReal& p, long M) const;
  /// Coefficient of the finite cut leaving sheet -2M-1 downward.
  CycloReal rho_neg(const CycloReal& p, long M) const;
  /// Coefficient of the infinite cut leaving sheet -2M downward.
  CycloReal delta_neg(const CycloReal& p, long M) const;
  /// Coefficient of the linear term on sheet K (pairs: odd K with K+1).
  CycloReal alpha(const CycloReal& p, long K) const;

  /// The p = 1 boundary coefficients (rho_{2k}, delta_{2k}) evaluated along
  /// the root-of-unity route, with sqrt(q(q-4)) = 2i sin(theta) and
  /// q - 4 = -4 sin^2(theta/2). Independent of the general-p formulas.
  std::pair<CycloReal, CycloReal> p1_closed_forms(long k) const;

  /// Roots {1, e^{i theta}, e^{-i theta}} of x^3 - (q-1)(x^2 - x) - 1.
  std::array<CycloNumber, 3> characteristic_roots() const;

  /// First vanishing coefficient labels on each side, scanning one period;
  /// empty when the structure is not finite-sheeted.
  std::optional<TerminationLabels> termination_labels(const CycloReal& p) const;

  /// Table built from the closed-form coefficient expressions.
  SheetCoefficientTable closed_form_table(const CycloReal& p, LabelRange range) const;

  /// Table built by running the six-term difference equation
  /// y_K = (q-1)(y_{K-2} - y_{K-4}) + y_{K-6} on each parity chain,
  /// seeded from the closed forms at the three labels nearest zero.
  SheetCoefficientTable recurrence_table(const CycloReal& p, LabelRange range) const;

 private:
  struct Inverses {
    CycloReal sin_theta;
    CycloReal sin_half_theta;
    CycloReal alpha_denom;
  };
  // The inverses are only needed by the coefficient formulas; membership
  // tests stay division-free, so they are computed lazily, once.
  const Inverses& inverses() const;

  ThetaParam param_;
  unsigned long order_;
  CycloReal q_;
  mutable std::once_flag inverses_once_;
  mutable std::unique_ptr<const Inverses> inverses_;
};

/// Validates q against the context and returns the characteristic roots.
std::array<CycloNumber, 3> characteristic_roots(const CycloReal& q, const ThetaParam& param);

/// Extends a three-term seed along y_t = (q-1)(y_{t-1} - y_{t-2}) + y_{t-3}
/// until `count` values are present. The same kernel runs both directions:
/// the characteristic polynomial is self-reciprocal.
std::vector<CycloReal> recurrence_chain(const CycloReal& q,
                                        std::array<CycloReal, 3> seeds,
                                        std::size_t count);

}  // namespace potts
