#include <benchmark/benchmark.h>

#include "weilcheck/weil.hpp"

using namespace weilcheck;

static void BM_ChainDefect(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(chain_defect(k));
}
BENCHMARK(BM_ChainDefect)->Arg(2)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BraidLifts(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_braid_lifts(k));
}
BENCHMARK(BM_BraidLifts)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_RhoS(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rho_generator(GenS{}, 2, k));
}
BENCHMARK(BM_RhoS)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
