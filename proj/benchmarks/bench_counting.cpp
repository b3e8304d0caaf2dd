#include "lozenge/builders.hpp"
#include "lozenge/lgv.hpp"
#include "lozenge/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace lozenge;

static void BM_CountHexagon(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  Region h = semiregular_hexagon(s, s, s);
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(h));
}
BENCHMARK(BM_CountHexagon)->Arg(2)->Arg(3);

static void BM_CountHalfHexagonWeighted(benchmark::State& state) {
  Region r = half_hexagon(static_cast<int>(state.range(0)), 3, 1, {3}, HalfHexVariant::VplusBar);
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(r));
}
BENCHMARK(BM_CountHalfHexagonWeighted)->Arg(2)->Arg(4);

static void BM_LgvDeterminant(benchmark::State& state) {
  const int a = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PathMatrix m = path_matrix_V(Rat(a), 3, 2, {3, 5});
    benchmark::DoNotOptimize(determinant_exact(m));
  }
}
BENCHMARK(BM_LgvDeterminant)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
