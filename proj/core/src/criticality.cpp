#include "potts/criticality.hpp"

namespace potts {

long long discriminant_degree(const ThetaParam& param) {
  const long long m = param.m;
  if (param.kase == CaseTag::Case1) return 2 * m * (2 * m - 1) - m;
  return m * (m - 1) - (m - 1) / 2;  // m odd in Case 2
}

DegreeDecomposition degree_decomposition(const ThetaParam& param) {
  const long long m = param.m;
  if (param.kase == CaseTag::Case1)
    return DegreeDecomposition{(2 * m - 2) / 2, 2 * m * (2 * m - 1)};
  return DegreeDecomposition{(m - 1) / 2, m * (m - 1)};
}

BigRational critical_exponent(const ThetaParam& param) {
  const auto parts = degree_decomposition(param);
  const BigRational numerator(discriminant_degree(param) - parts.sqrt_cuts);
  return numerator / BigRational(parts.collided_pairs);
}

BigRational string_exponent(const ThetaParam& param) {
  const BigRational rs = critical_exponent(param);
  // Exponent of the resolvent is the inverse branch order: 1 - gamma_s = s/r.
  return BigRational(1) - BigRational(rs.denominator(), rs.numerator());
}

ExponentResult exponent_result(const ThetaParam& param) {
  const auto parts = degree_decomposition(param);
  const unsigned sheets =
      (param.kase == CaseTag::Case1) ? 2 * param.m : param.m;
  return ExponentResult{param,
                        sheets,
                        discriminant_degree(param),
                        parts.sqrt_cuts,
                        critical_exponent(param),
                        string_exponent(param)};
}

}  // namespace potts
