#include <benchmark/benchmark.h>

#include "zinbiel/combinatorics.hpp"
#include "zinbiel/free_leibniz.hpp"

using namespace zinbiel;

static void BM_SignedShuffleTerms(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(signed_shuffle_terms(n));
}
BENCHMARK(BM_SignedShuffleTerms)->DenseRange(2, 8, 2);

static void BM_LeibnizExpansion(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(leibniz_expansion(m));
}
BENCHMARK(BM_LeibnizExpansion)->DenseRange(2, 8, 2);

static void BM_BuildTruncated(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_truncated(2, n));
}
BENCHMARK(BM_BuildTruncated)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
