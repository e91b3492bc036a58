#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "potts/cyclotomic.hpp"

using potts::BigRational;
using potts::CycloNumber;

namespace {

CycloNumber dense_element(unsigned long order, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-5, 5);
  std::vector<std::pair<long long, BigRational>> terms;
  const unsigned long phi = potts::euler_phi(order);
  for (unsigned long j = 0; j < phi; ++j)
    terms.emplace_back(static_cast<long long>(j), BigRational(num(rng), 2));
  return CycloNumber::from_terms(order, terms);
}

void BM_CycloMultiply(benchmark::State& state) {
  const unsigned long order = static_cast<unsigned long>(state.range(0));
  const CycloNumber a = dense_element(order, 1);
  const CycloNumber b = dense_element(order, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
  state.SetLabel("phi=" + std::to_string(potts::euler_phi(order)));
}
BENCHMARK(BM_CycloMultiply)->Arg(24)->Arg(120)->Arg(360)->Arg(680);

void BM_CycloInvert(benchmark::State& state) {
  const unsigned long order = static_cast<unsigned long>(state.range(0));
  const CycloNumber a = dense_element(order, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a.invert());
  }
}
BENCHMARK(BM_CycloInvert)->Arg(24)->Arg(120)->Arg(200);

void BM_SinPi(benchmark::State& state) {
  const unsigned long b = static_cast<unsigned long>(state.range(0));
  long long a = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(potts::sin_pi(a, b));
    a = (a + 7) % (2 * static_cast<long long>(b));
  }
}
BENCHMARK(BM_SinPi)->Arg(30)->Arg(170);

void BM_CyclotomicPolynomial(benchmark::State& state) {
  // The cache is keyed by order, so probe a rotating set of fresh orders
  // per iteration batch by touching the expensive squarefree ones.
  for (auto _ : state) {
    benchmark::DoNotOptimize(potts::cyclotomic_polynomial(
        static_cast<unsigned long>(state.range(0))));
  }
}
BENCHMARK(BM_CyclotomicPolynomial)->Arg(680)->Arg(997);

}  // namespace
