#include <benchmark/benchmark.h>

#include "thinset/constructions.hpp"
#include "thinset/density.hpp"
#include "thinset/parser.hpp"

using namespace thinset;

namespace {

void BM_EnumeratePrimes(benchmark::State& state) {
  const SetExpr primes = SetExpr::catalog("primes");
  for (auto _ : state) {
    Prefix prefix = enumerate_upto(primes, state.range(0));
    benchmark::DoNotOptimize(prefix);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumeratePrimes)->Range(1 << 14, 1 << 22)->Complexity();

void BM_EnumerateBlocks(benchmark::State& state) {
  const SetExpr runs = SetExpr::catalog("pow2run");
  for (auto _ : state) {
    Prefix prefix = enumerate_upto(runs, state.range(0));
    benchmark::DoNotOptimize(prefix);
  }
}
BENCHMARK(BM_EnumerateBlocks)->Range(1 << 14, 1 << 22);

void BM_RunStatistic(benchmark::State& state) {
  const Prefix prefix =
      enumerate_upto(SetExpr::catalog("primes"), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_statistic(prefix, 6));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RunStatistic)->Range(1 << 14, 1 << 20)->Complexity();

void BM_GreedyDecomposition(benchmark::State& state) {
  const Prefix prefix =
      enumerate_upto(SetExpr::catalog("primes"), state.range(0));
  for (auto _ : state) {
    BlockDecomposition blocks = greedy_block_decomposition(prefix, 6);
    benchmark::DoNotOptimize(blocks);
  }
}
BENCHMARK(BM_GreedyDecomposition)->Range(1 << 14, 1 << 20);

void BM_UniformWindowSweep(benchmark::State& state) {
  const Prefix prefix =
      enumerate_upto(SetExpr::catalog("primes"), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_window_count(prefix, 128, 0));
    benchmark::DoNotOptimize(min_window_count(prefix, 128, 0));
  }
}
BENCHMARK(BM_UniformWindowSweep)->Range(1 << 14, 1 << 20);

void BM_ClassifyAllGallery(benchmark::State& state) {
  const SetExpr expr = gallery("pow2run");
  for (auto _ : state) {
    auto verdicts = classify_all(expr, state.range(0));
    benchmark::DoNotOptimize(verdicts);
  }
}
BENCHMARK(BM_ClassifyAllGallery)->Range(1 << 12, 1 << 20);

void BM_MergePair(benchmark::State& state) {
  const Prefix s = enumerate_upto(SetExpr::catalog("tri"), state.range(0));
  const Prefix t =
      enumerate_upto(SetExpr::catalog("poly", {3, 2}), state.range(0));
  for (auto _ : state) {
    BlockDecomposition merged = merge_super_thin(s, t, state.range(0));
    benchmark::DoNotOptimize(merged);
  }
}
BENCHMARK(BM_MergePair)->Range(1 << 12, 1 << 20);

}  // namespace

BENCHMARK_MAIN();
