#include <benchmark/benchmark.h>

#include "zinbiel/catalog.hpp"
#include "zinbiel/complexes.hpp"
#include "zinbiel/random.hpp"
#include "zinbiel/tensor_bridge.hpp"

using namespace zinbiel;

static void BM_DlDelta(benchmark::State& state) {
  const auto b = builtin_algebra("polyzinbiel(2)");
  const auto m = regular_bimodule(b);
  CoefficientSource src(1);
  const Cochain f = random_cochain(Theory::dl, static_cast<unsigned>(state.range(0)), b.dim(), m.module_dim(), src);
  for (auto _ : state) benchmark::DoNotOptimize(dl_delta(b, m, f));
}
BENCHMARK(BM_DlDelta)->DenseRange(1, 3);

static void BM_DlDeltaLowDegree(benchmark::State& state) {
  const auto b = builtin_algebra("polyzinbiel(2)");
  const auto m = regular_bimodule(b);
  CoefficientSource src(1);
  const Cochain f = random_cochain(Theory::dl, static_cast<unsigned>(state.range(0)), b.dim(), m.module_dim(), src);
  for (auto _ : state) benchmark::DoNotOptimize(dl_delta_lowdeg(b, m, f));
}
BENCHMARK(BM_DlDeltaLowDegree)->DenseRange(1, 3);

static void BM_PsiMatrix(benchmark::State& state) {
  const auto g = builtin_algebra("freeleibniz(2,3)");
  const auto b = builtin_algebra("B2");
  const auto m = regular_bimodule(b);
  for (auto _ : state) benchmark::DoNotOptimize(psi_matrix(g, b, m, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PsiMatrix)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_VerifyChainMap(benchmark::State& state) {
  const auto g = builtin_algebra("freeleibniz(2,2)");
  const auto b = builtin_algebra("B3");
  const auto m = regular_bimodule(b);
  for (auto _ : state) benchmark::DoNotOptimize(verify_chain_map(g, b, m, static_cast<unsigned>(state.range(0)), 1, 0));
}
BENCHMARK(BM_VerifyChainMap)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
