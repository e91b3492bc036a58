#pragma once

#include "potts/rational.hpp"
#include "potts/sheets.hpp"

namespace potts {

/// Critical data of the generating-function sheet structure at one theta.
struct ExponentResult {
  ThetaParam param;
  unsigned sheet_count;       // 2m (Case 1) or m (Case 2)
  long long disc_degree;      // degree of the discriminant
  long long sqrt_cut_count;   // un-collided square-root cuts at criticality
  BigRational critical_exponent;  // r/s
  BigRational string_exponent;    // gamma_s = 1 - s/r
};

/// deg Delta(z): 2m(2m-1) - m in Case 1, m(m-1) - (m-1)/2 in Case 2.
long long discriminant_degree(const ThetaParam& param);

struct DegreeDecomposition {
  long long sqrt_cuts;       // contribute degree 1 each
  long long collided_pairs;  // contribute degree r/s each
};

/// The two summands of the discriminant degree at criticality: plain
/// square-root cuts and the all-pairs factor of the collided branch point.
DegreeDecomposition degree_decomposition(const ThetaParam& param);

/// Solves disc_degree = sqrt_cuts + (r/s) * collided_pairs for r/s.
BigRational critical_exponent(const ThetaParam& param);

/// gamma_s = 1 - s/r; the disk function scales as (z - z_c)^{1 - gamma_s}.
BigRational string_exponent(const ThetaParam& param);

ExponentResult exponent_result(const ThetaParam& param);

}  // namespace potts
