#include <benchmark/benchmark.h>

#include "weilcheck/coinvariants.hpp"

using namespace weilcheck;

static void BM_CoinvariantDimF2(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(coinvariant_dim(g, 2, 2));
}
BENCHMARK(BM_CoinvariantDimF2)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_CoinvariantDimOddP(benchmark::State& state) {
  const long p = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(coinvariant_dim(4, p, 2));
}
BENCHMARK(BM_CoinvariantDimOddP)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_InvariantBilinear(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_bilinear_dim(n, 2));
}
BENCHMARK(BM_InvariantBilinear)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
