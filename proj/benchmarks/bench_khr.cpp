#include <benchmark/benchmark.h>

#include <random>

#include "khr/fixtures.hpp"
#include "khr/homology.hpp"
#include "khr/lasagna.hpp"

using namespace khr;

namespace {

const char* const kDiagrams[] = {"trefoil_right", "borromean", "t34", "cable_1_2_1"};

void BM_CubeRankTwo(benchmark::State& state) {
  PlanarDiagram d = fixture(kDiagrams[state.range(0)]).diagram();
  auto a = unknot_algebra(2);
  for (auto _ : state) benchmark::DoNotOptimize(cube(d, a).total_dimension());
  state.SetLabel(kDiagrams[state.range(0)]);
}
BENCHMARK(BM_CubeRankTwo)->DenseRange(0, 3);

void BM_IntegralHomology(benchmark::State& state) {
  PlanarDiagram d = fixture(kDiagrams[state.range(0)]).diagram();
  auto c = cube(d, unknot_algebra(2));
  for (auto _ : state) benchmark::DoNotOptimize(integral_homology(c).total_rank());
  state.SetLabel(kDiagrams[state.range(0)]);
}
BENCHMARK(BM_IntegralHomology)->DenseRange(0, 3);

void BM_FilteredHomology(benchmark::State& state) {
  PlanarDiagram d = fixture(kDiagrams[state.range(0)]).diagram();
  auto c = deformed_complex(d, DeformationMultiset::consecutive(2));
  for (auto _ : state) benchmark::DoNotOptimize(filtered_homology(c).total_dimension());
  state.SetLabel(kDiagrams[state.range(0)]);
}
BENCHMARK(BM_FilteredHomology)->DenseRange(0, 3);

void BM_SmithFormRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> value(-3, 3);
  std::bernoulli_distribution keep(4.0 / n);
  SparseMatrix<Integer> m(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      if (keep(rng)) {
        int v = value(rng);
        if (v != 0) m.columns[j].emplace_back(i, Integer(v));
      }
  for (auto _ : state) benchmark::DoNotOptimize(smith_form(m).rank);
}
BENCHMARK(BM_SmithFormRandom)->Arg(64)->Arg(128)->Arg(256);

void BM_Decomposition(benchmark::State& state) {
  PlanarDiagram d = fixture("borromean").diagram();
  for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(d, DeformationMultiset::consecutive(2)).matched());
}
BENCHMARK(BM_Decomposition);

}  // namespace

BENCHMARK_MAIN();
