#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "potts/cyclotomic.hpp"

namespace potts {

enum class Model { Ising, Potts3 };

/// Temperature and coupling data relating a spin model to its dual.
/// For Potts3, c parameterizes the off-diagonal coupling of the three-matrix
/// quadratic form, whose overall normalization is mu(c) =
/// (1-c)/((1+c)(1-2c)); only the c(beta) relation itself is testable here.
struct DualityMap {
  Model model;
  double beta;
  double beta_dual;
  double c;       // 1/(e^beta + 1); Potts3 only, 0 for Ising
  double lambda;  // matrix rescaling factor
  double coupling_scale;  // g_dual / g = lambda^{-3}/sqrt(#states)
};

/// Dual temperature: tanh(beta_dual) = e^{-2 beta} (Ising) or
/// e^{beta_dual} = 1 + 3/(e^beta - 1) (Potts3). Self-inverse; beta > 0.
double dual_beta(Model model, double beta);

/// Scalar parameters of the change of variables between a model and its
/// dual; beta > 0 and g != 0.
DualityMap coupling_map(Model model, double beta, double g);

enum class Letter : std::uint8_t { X, U, Udag };

/// Word over {X, U, U^dagger} in which every U is matched, after a run of
/// X letters, by the next U^dagger, with no nesting.
struct SpinWord {
  std::vector<Letter> letters;
  std::string str() const;
};

inline constexpr unsigned kWordLengthCap = 14;
inline constexpr unsigned kExpansionLengthCap = 12;

/// All allowed words of length n, generated by
/// W_n = X W_{n-1} + sum_{k=2..n} U X^{k-2} U^dagger W_{n-k}.
/// There are 2^{n-1} of them for n >= 1. n is capped at kWordLengthCap.
std::vector<SpinWord> allowed_words(unsigned n);

/// Coefficients of the spin strings produced by substituting
/// X = sum M_s, U = sum w^{s-1} M_s, U^dagger = sum w^{1-s} M_s
/// (w a primitive cube root of unity) into the sum of allowed words.
/// Strings are indexed in base 3, first spin most significant.
class WordExpansion {
 public:
  WordExpansion(unsigned length, std::vector<std::array<std::int64_t, 3>> counts);

  unsigned length() const { return length_; }
  std::size_t string_count() const { return counts_.size(); }

  /// Coefficient of the string sigma (entries in 1..3) as an element of Q(zeta_3).
  CycloNumber coefficient(std::span<const int> sigma) const;
  CycloNumber coefficient_by_index(std::size_t index) const;

  static std::size_t index_of(std::span<const int> sigma);
  static std::vector<int> sigma_from_index(unsigned length, std::size_t index);

 private:
  unsigned length_;
  // Tallies of omega^0, omega^1, omega^2 contributions per string.
  std::vector<std::array<std::int64_t, 3>> counts_;
};

/// Brute-force expansion of the allowed-word sum: every word contributes
/// its product of per-letter phases to every one of the 3^n strings.
/// n is capped at kExpansionLengthCap; jobs > 1 splits the string space.
WordExpansion expand_word_sum(unsigned n, unsigned jobs = 1);

/// Product form of the same coefficient: prod_k (1 + w^{sigma_k - sigma_{k+1}}).
CycloNumber coefficient_closed_form(std::span<const int> sigma);

/// Boundary weight 2^{n-1} (-1/2)^{#cyclic mismatches of sigma}; equals the
/// real part of the word-sum coefficient.
BigRational new_weight(std::span<const int> sigma);

}  // namespace potts
