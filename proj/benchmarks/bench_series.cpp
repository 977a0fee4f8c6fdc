#include <benchmark/benchmark.h>

#include "rrc/functions.hpp"
#include "rrc/partition.hpp"
#include "rrc/qseries.hpp"

using namespace rrc;

static void BM_EulerProduct(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(euler_product(-6, 1, Precision(n)));
  state.SetComplexityN(n);
}
BENCHMARK(BM_EulerProduct)->RangeMultiplier(2)->Range(256, 4096)->Complexity();

static void BM_Multiply(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto f = euler_product(-3, 1, Precision(n));
  const auto g = euler_product(5, 2, Precision(n));
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, g));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(2)->Range(256, 2048);

static void BM_Invert(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  const auto t = euler_product(6, 5, Precision(n)) * euler_product(-6, 1, Precision(n));
  for (auto _ : state) benchmark::DoNotOptimize(invert(t, n));
}
BENCHMARK(BM_Invert)->RangeMultiplier(2)->Range(256, 2048);

static void BM_A1Series(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(a1_series(Precision(state.range(0))));
}
BENCHMARK(BM_A1Series)->Arg(650)->Arg(5000);

static void BM_PartitionTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(PartitionTable(state.range(0)));
}
BENCHMARK(BM_PartitionTable)->Arg(10000)->Arg(50000);

static void BM_NamedP1(benchmark::State& state) {
  // named() caches, so time the underlying monomial sum through a fresh depth each round.
  std::int64_t depth = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(named(NamedFunction::P1, Precision(depth++)));
}
BENCHMARK(BM_NamedP1)->Arg(500)->Iterations(5);
