#include <benchmark/benchmark.h>

#include "tqft/catalan.hpp"
#include "tqft/eco.hpp"
#include "tqft/toprec.hpp"
#include "tqft/zoo.hpp"

using namespace tqft;

static void BM_CountRecursion(benchmark::State& state) {
  const int sum = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CountTable table;
    benchmark::DoNotOptimize(table.count(1, {sum - 2, 2}));
  }
}
BENCHMARK(BM_CountRecursion)->Arg(10)->Arg(20)->Arg(30);

static void BM_CountBrute(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_brute(0, {m}));
}
BENCHMARK(BM_CountBrute)->Arg(6)->Arg(8)->Arg(10);

static void BM_SurfaceInvariant(benchmark::State& state) {
  auto alg = center_of_group_algebra(preset_group("dihedral(4)"));
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(surface_invariant(alg, g));
}
BENCHMARK(BM_SurfaceInvariant)->Arg(2)->Arg(8);

static void BM_AiryRecursion(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(toprec_run(airy_curve(), m));
}
BENCHMARK(BM_AiryRecursion)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_TwistedRecursion(benchmark::State& state) {
  auto alg = center_of_group_algebra(preset_group("S3"));
  for (auto _ : state) benchmark::DoNotOptimize(twisted_toprec_run(airy_curve(), alg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TwistedRecursion)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_WkbResidual(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(wkb_residual(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WkbResidual)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
