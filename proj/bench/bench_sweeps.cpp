// Serial reference against the OpenMP kernels: corpus sweeps and random trials.

#include <benchmark/benchmark.h>

#include "konig/experiments.hpp"
#include "konig/oracle.hpp"
#include "konig/verify.hpp"

using namespace konig;

namespace {

const Corpus& corpus7() {
  static const Corpus c = connected_bipartite_corpus(7);
  return c;
}

template <Execution E>
void BM_classification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(suite_classification(corpus7(), E));
}

template <Execution E>
void BM_path_structure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(suite_path_structure(corpus7(), E));
}

template <Execution E>
void BM_reverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(suite_reverse(corpus7(), E));
}

void BM_trials_serial(benchmark::State& state) {
  const TrialConfig cfg{20, 20, state.range(0) / 10.0, 2000, 7};
  for (auto _ : state) benchmark::DoNotOptimize(run_trials_serial(cfg));
}

void BM_trials_parallel(benchmark::State& state) {
  const TrialConfig cfg{20, 20, state.range(0) / 10.0, 2000, 7};
  for (auto _ : state) benchmark::DoNotOptimize(run_trials(cfg));
}

}  // namespace

BENCHMARK(BM_classification<Execution::kSerial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_classification<Execution::kParallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_path_structure<Execution::kSerial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_path_structure<Execution::kParallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reverse<Execution::kSerial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reverse<Execution::kParallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trials_serial)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_trials_parallel)->Arg(1)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
