#include <benchmark/benchmark.h>

#include "weilcheck/arith.hpp"
#include "weilcheck/cyclotomic.hpp"

using namespace weilcheck;

static void BM_CycMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  CycScalar a = CycScalar::zero(n), b = CycScalar::zero(n);
  for (int j = 0; j < n; ++j) {
    a = a + CycScalar::from_int(j % 5 - 2) * CycScalar::root_of_unity(n, j);
    b = b + CycScalar::from_int(j % 3 - 1) * CycScalar::root_of_unity(n, j);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMultiply)->Arg(8)->Arg(16)->Arg(48)->Arg(128);

static void BM_CycEquality(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CycScalar a = gauss_sum_bruteforce(1, n);
  const CycScalar b = gauss_sum_closed(1, n);
  for (auto _ : state) benchmark::DoNotOptimize(a == b);
}
BENCHMARK(BM_CycEquality)->Arg(12)->Arg(40)->Arg(100);

static void BM_GaussClosed(benchmark::State& state) {
  const long v = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gauss_sum_closed(1, v));
}
BENCHMARK(BM_GaussClosed)->Arg(16)->Arg(60)->Arg(100);

BENCHMARK_MAIN();
