// Discrete orthogonality sums: OpenMP kernel vs. the serial reference.
//   ./build/bench/bench_ortho --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>

#include "tricomi/exact.hpp"

using namespace tricomi;

namespace {

constexpr long kMaxDeg = 4;

void BM_OrthoParallel(benchmark::State& state) {
  mp::Precision p(128);
  mp::Real alpha(1.0, p);
  const long k_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(exact::ortho_matrix(kMaxDeg, alpha, k_max, p));
  state.SetItemsProcessed(state.iterations() * k_max);
}

void BM_OrthoSerial(benchmark::State& state) {
  mp::Precision p(128);
  mp::Real alpha(1.0, p);
  const long k_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(exact::ortho_matrix_serial(kMaxDeg, alpha, k_max, p));
  state.SetItemsProcessed(state.iterations() * k_max);
}

}  // namespace

BENCHMARK(BM_OrthoParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OrthoSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
