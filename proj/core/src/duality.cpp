#include "potts/duality.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace potts {
namespace {

std::size_t pow3(unsigned n) {
  std::size_t r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 3;
  return r;
}

void validate_sigma(std::span<const int> sigma) {
  if (sigma.empty())
    throw std::invalid_argument("spin string must be non-empty");
  for (int s : sigma) {
    if (s < 1 || s > 3)
      throw std::invalid_argument("spin values must lie in {1, 2, 3}");
  }
}

}  // namespace

double dual_beta(Model model, double beta) {
  if (!(beta > 0.0))
    throw std::invalid_argument("dual_beta: beta must be positive");
  if (model == Model::Ising) return std::atanh(std::exp(-2.0 * beta));
  return std::log1p(3.0 / std::expm1(beta));
}

DualityMap coupling_map(Model model, double beta, double g) {
  if (!(beta > 0.0))
    throw std::invalid_argument("coupling_map: beta must be positive");
  if (g == 0.0) throw std::invalid_argument("coupling_map: g must be non-zero");
  DualityMap map{model, beta, dual_beta(model, beta), 0.0, 0.0, 0.0};
  if (model == Model::Ising) {
    map.lambda = 1.0 + std::exp(-2.0 * beta);
    map.coupling_scale = 1.0 / (map.lambda * map.lambda * map.lambda * std::sqrt(2.0));
  } else {
    map.c = 1.0 / (std::exp(beta) + 1.0);
    map.lambda = std::sqrt((1.0 - map.c) / (1.0 + map.c));
    map.coupling_scale = 1.0 / (map.lambda * map.lambda * map.lambda * std::sqrt(3.0));
  }
  return map;
}

std::string SpinWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    switch (letters[i]) {
      case Letter::X: out += 'X'; break;
      case Letter::U: out += 'U'; break;
      case Letter::Udag: out += "Ud"; break;
    }
  }
  return out;
}

std::vector<SpinWord> allowed_words(unsigned n) {
  if (n > kWordLengthCap)
    throw std::invalid_argument("allowed_words: length cap is " +
                                std::to_string(kWordLengthCap));
  std::vector<std::vector<SpinWord>> table(n + 1);
  table[0] = {SpinWord{}};
  for (unsigned j = 1; j <= n; ++j) {
    for (const SpinWord& tail : table[j - 1]) {
      SpinWord w;
      w.letters.reserve(j);
      w.letters.push_back(Letter::X);
      w.letters.insert(w.letters.end(), tail.letters.begin(), tail.letters.end());
      table[j].push_back(std::move(w));
    }
    for (unsigned k = 2; k <= j; ++k) {
      for (const SpinWord& tail : table[j - k]) {
        SpinWord w;
        w.letters.reserve(j);
        w.letters.push_back(Letter::U);
        w.letters.insert(w.letters.end(), k - 2, Letter::X);
        w.letters.push_back(Letter::Udag);
        w.letters.insert(w.letters.end(), tail.letters.begin(), tail.letters.end());
        table[j].push_back(std::move(w));
      }
    }
  }
  return std::move(table[n]);
}

WordExpansion::WordExpansion(unsigned length,
                             std::vector<std::array<std::int64_t, 3>> counts)
    : length_(length), counts_(std::move(counts)) {
  if (counts_.size() != pow3(length_))
    throw std::invalid_argument("WordExpansion: wrong table size");
}

std::size_t WordExpansion::index_of(std::span<const int> sigma) {
  validate_sigma(sigma);
  std::size_t idx = 0;
  for (int s : sigma) idx = idx * 3 + static_cast<std::size_t>(s - 1);
  return idx;
}

std::vector<int> WordExpansion::sigma_from_index(unsigned length,
                                                 std::size_t index) {
  std::vector<int> sigma(length, 1);
  for (unsigned k = length; k-- > 0;) {
    sigma[k] = static_cast<int>(index % 3) + 1;
    index /= 3;
  }
  return sigma;
}

CycloNumber WordExpansion::coefficient_by_index(std::size_t index) const {
  const auto& c = counts_.at(index);
  // c0 + c1 w + c2 w^2 with w^2 = -1 - w.
  const std::pair<long long, BigRational> terms[] = {
      {0, BigRational(static_cast<long>(c[0] - c[2]))},
      {1, BigRational(static_cast<long>(c[1] - c[2]))},
  };
  return CycloNumber::from_terms(3, terms);
}

CycloNumber WordExpansion::coefficient(std::span<const int> sigma) const {
  if (sigma.size() != length_)
    throw std::invalid_argument("WordExpansion: wrong string length");
  return coefficient_by_index(index_of(sigma));
}

WordExpansion expand_word_sum(unsigned n, unsigned jobs) {
  if (n > kExpansionLengthCap)
    throw std::invalid_argument("expand_word_sum: length cap is " +
                                std::to_string(kExpansionLengthCap));
  const std::size_t total = pow3(n);
  std::vector<std::array<std::int64_t, 3>> counts(total, {0, 0, 0});
  if (n == 0) {
    counts[0][0] = 1;  // the empty word
    return WordExpansion(0, std::move(counts));
  }

  // Per-letter phase multiplier: the word's contribution to sigma is
  // omega^{sum_k mult[k] * (sigma_k - 1)}.
  const auto words = allowed_words(n);
  std::vector<std::vector<std::uint8_t>> mults;
  mults.reserve(words.size());
  for (const SpinWord& w : words) {
    std::vector<std::uint8_t> u(n, 0);
    for (unsigned k = 0; k < n; ++k) {
      if (w.letters[k] == Letter::U) u[k] = 1;
      if (w.letters[k] == Letter::Udag) u[k] = 2;
    }
    mults.push_back(std::move(u));
  }

  const auto run_chunk = [&](std::size_t lo, std::size_t hi) {
    std::vector<std::uint8_t> digits(n, 0);
    for (const auto& u : mults) {
      // Seed digits and exponent at the chunk start.
      std::size_t idx = lo;
      unsigned e = 0;
      for (unsigned k = n; k-- > 0;) {
        digits[k] = static_cast<std::uint8_t>(idx % 3);
        idx /= 3;
        e += u[k] * digits[k];
      }
      e %= 3;
      for (std::size_t i = lo; i < hi; ++i) {
        ++counts[i][e];
        // Advance the base-3 odometer; a digit step of +1 or -2 shifts the
        // exponent by the same amount mod 3.
        for (unsigned k = n; k-- > 0;) {
          e = (e + u[k]) % 3;
          if (digits[k] < 2) {
            ++digits[k];
            break;
          }
          digits[k] = 0;
        }
      }
    }
  };

  if (jobs <= 1 || total < 4096) {
    run_chunk(0, total);
  } else {
    const unsigned count = std::min<std::size_t>(jobs, 16);
    std::vector<std::thread> workers;
    workers.reserve(count);
    const std::size_t step = (total + count - 1) / count;
    for (unsigned w = 0; w < count; ++w) {
      const std::size_t lo = w * step;
      const std::size_t hi = std::min(total, lo + step);
      if (lo >= hi) break;
      workers.emplace_back(run_chunk, lo, hi);
    }
    for (auto& t : workers) t.join();
  }
  return WordExpansion(n, std::move(counts));
}

CycloNumber coefficient_closed_form(std::span<const int> sigma) {
  validate_sigma(sigma);
  CycloNumber prod = CycloNumber::from_rational(3, BigRational(1));
  for (std::size_t k = 0; k + 1 < sigma.size(); ++k) {
    const std::pair<long long, BigRational> terms[] = {
        {0, BigRational(1)},
        {sigma[k] - sigma[k + 1], BigRational(1)},
    };
    prod *= CycloNumber::from_terms(3, terms);
  }
  return prod;
}

BigRational new_weight(std::span<const int> sigma) {
  validate_sigma(sigma);
  const std::size_t n = sigma.size();
  unsigned mismatches = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (sigma[k] != sigma[(k + 1) % n]) ++mismatches;
  }
  BigInt num((mismatches % 2 == 0) ? 1 : -1);
  num <<= (n - 1);
  BigInt den(1);
  den <<= mismatches;
  return BigRational(num, den);
}

}  // namespace potts
