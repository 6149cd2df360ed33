#include <benchmark/benchmark.h>

#include "sesqui/automaton.hpp"
#include "sesqui/enumerate.hpp"
#include "sesqui/graph.hpp"
#include "sesqui/tables.hpp"
#include "sesqui/zprobe.hpp"

using namespace sesqui;

namespace {

void BM_EnumerateWindows(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  int m = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_windows(n, m, Shear::Straight));
}
BENCHMARK(BM_EnumerateWindows)->Args({3, 2})->Args({2, 4})->Args({6, 2})->Unit(benchmark::kMillisecond);

void BM_TrapezoidOracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_windows(3, 2, 1));
}
BENCHMARK(BM_TrapezoidOracle)->Unit(benchmark::kMillisecond);

void BM_FactorH(benchmark::State& state) {
  auto pairs = pair_family(static_cast<int>(state.range(0)), Shear::Straight);
  for (auto _ : state) benchmark::DoNotOptimize(factor_h(pairs, Unique::Bottom));
}
BENCHMARK(BM_FactorH)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_BuildG(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_G(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildG)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_GraphIso(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto g = build_G(n);
  auto gamma = build_Gamma(n);
  for (auto _ : state) benchmark::DoNotOptimize(iso(g, gamma));
}
BENCHMARK(BM_GraphIso)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DeterminizeMinimize(benchmark::State& state) {
  auto a = build_A(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinize_minimize(a));
}
BENCHMARK(BM_DeterminizeMinimize)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_EmptinessProbe(benchmark::State& state) {
  std::vector<ColumnConstraint> cs{parse_constraint("-1:012")};
  for (auto _ : state) benchmark::DoNotOptimize(emptiness_probe(cs, 64, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EmptinessProbe)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SixthShift(benchmark::State& state) {
  auto xs = sample_xi(1000, 40, 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_sixth_shift(xs, 40, 1));
}
BENCHMARK(BM_SixthShift)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
