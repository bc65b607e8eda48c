#include <benchmark/benchmark.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/complexes.hpp"
#include "zinbiel/tensor_bridge.hpp"

using namespace zinbiel;

static void BM_RankDlDelta(benchmark::State& state) {
  const auto b = builtin_algebra("polyzinbiel(3)");
  const Matrix d = delta_matrix(Theory::dl, b, regular_bimodule(b), static_cast<unsigned>(state.range(0))).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
  state.counters["cols"] = static_cast<double>(d.cols());
}
BENCHMARK(BM_RankDlDelta)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_RankCeDelta(benchmark::State& state) {
  const auto g = tensor_lie(builtin_algebra("freeleibniz(2,2)"), builtin_algebra("B2"));
  const Matrix d = delta_matrix(Theory::ce, g, regular_bimodule(g), static_cast<unsigned>(state.range(0))).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(rank(d));
  state.counters["cols"] = static_cast<double>(d.cols());
}
BENCHMARK(BM_RankCeDelta)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_Nullspace(benchmark::State& state) {
  const auto b = builtin_algebra("B3");
  const Matrix d = delta_matrix(Theory::dl, b, regular_bimodule(b), 2).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(d));
}
BENCHMARK(BM_Nullspace)->Unit(benchmark::kMillisecond);
