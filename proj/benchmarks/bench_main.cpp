#include <benchmark/benchmark.h>

#include "dillab/bounds.hpp"
#include "dillab/families.hpp"
#include "dillab/intmatrix.hpp"
#include "dillab/intpoly.hpp"
#include "dillab/transgraph.hpp"

namespace {

using namespace dillab;

void BM_TorusPfEnclosure(benchmark::State& state) {
  const IntMatrix m = torus_matrix(static_cast<unsigned long>(state.range(0))).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(pf_enclosure(m));
}
BENCHMARK(BM_TorusPfEnclosure)->Arg(10)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_LargestRootTm(benchmark::State& state) {
  const IntPoly p = build_Tm(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(largest_root(p, 3));
}
BENCHMARK(BM_LargestRootTm)->Arg(5)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_KappaSweep(benchmark::State& state) {
  const auto hi = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_upper_constant(2, 31, hi));
}
BENCHMARK(BM_KappaSweep)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_PathCounts(benchmark::State& state) {
  const TransGraph g = TransGraph::from_matrix(torus_matrix(20).matrix);
  const auto d = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(path_counts(g, 0, d));
}
BENCHMARK(BM_PathCounts)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
