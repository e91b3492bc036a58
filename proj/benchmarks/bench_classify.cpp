#include <benchmark/benchmark.h>

#include "potts/classify.hpp"
#include "potts/duality.hpp"

namespace {

void BM_ScanIntegerP(benchmark::State& state) {
  const unsigned max_m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(potts::scan_integer_p(max_m, 3));
  }
  state.SetLabel("pairs=" +
                 std::to_string(potts::scan_integer_p(max_m, 3).pairs_scanned));
}
BENCHMARK(BM_ScanIntegerP)->Arg(40)->Arg(170)->Unit(benchmark::kMillisecond);

void BM_ScanExactOnly(benchmark::State& state) {
  const unsigned max_m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(potts::scan_integer_p(max_m, 3, 1, false));
  }
}
BENCHMARK(BM_ScanExactOnly)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_AllowedP(benchmark::State& state) {
  const potts::ThetaParam param(1, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(potts::allowed_p(param));
  }
}
BENCHMARK(BM_AllowedP)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_WordExpansion(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(potts::expand_word_sum(n, 2));
  }
}
BENCHMARK(BM_WordExpansion)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
