#include <benchmark/benchmark.h>

#include "msulab/experiment.hpp"
#include "msulab/generators.hpp"
#include "msulab/info_measures.hpp"
#include "msulab/presets.hpp"

using namespace msulab;

namespace {

ExperimentConfig workload() {
  auto c = preset("fig-f1");
  c.replicates = 50;
  c.sweep.values = {2, 10, 20, 40};
  return c;
}

void BM_ExperimentSerial(benchmark::State& state) {
  const auto c = workload();
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment_serial(c));
}

void BM_ExperimentParallel(benchmark::State& state) {
  const auto c = workload();
  const RunOptions opts{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(c, opts));
}

void BM_Msu(benchmark::State& state) {
  const DatasetSpec spec{GeneratorKind::Uniform, {static_cast<std::uint32_t>(state.range(1)), 4, 4}, 2, 1.0, 0.05};
  const auto s = generate_dataset(spec, static_cast<std::size_t>(state.range(0)), SeededRng(1, 0));
  for (auto _ : state) benchmark::DoNotOptimize(msu(s, {0, 1, 2, 3}));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ExperimentSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExperimentParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Msu)->Args({1000, 2})->Args({100000, 2})->Args({100000, 100000});

BENCHMARK_MAIN();
