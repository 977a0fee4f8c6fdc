#include <benchmark/benchmark.h>

#include "rrc/induction.hpp"
#include "rrc/operators.hpp"
#include "rrc/relations.hpp"
#include "rrc/skeleton.hpp"

using namespace rrc;

static void BM_VerifyModeq(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_modeq(state.range(0)));
}
BENCHMARK(BM_VerifyModeq)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_VerifyRelations(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_group_relations(default_relations(), state.range(0), false));
}
BENCHMARK(BM_VerifyRelations)->Arg(150)->Unit(benchmark::kMillisecond);

static void BM_LnChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ln_chain(static_cast<int>(state.range(0)), 30));
}
BENCHMARK(BM_LnChain)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_SymbolicImages(benchmark::State& state) {
  // U^(0) then U^(1) on L_2 / 5 through the image tables.
  const TPolyPair l1{{}, {{0, 1}}, 1};
  for (auto _ : state) {
    ImageTable u0(0, default_relations()), u1(1, default_relations());
    TPolyPair f = apply_operator(l1, u1);
    for (int i = 0; i < state.range(0); ++i) f = apply_operator(f, (f.j == 0) ? u0 : u1);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_SymbolicImages)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Skeleton(benchmark::State& state) {
  for (auto _ : state) {
    auto arrays = skeleton_init(default_relations());
    skeleton_extend(arrays, state.range(0));
    benchmark::DoNotOptimize(arrays);
  }
}
BENCHMARK(BM_Skeleton)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);
