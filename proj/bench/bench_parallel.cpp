// Serial reference vs OpenMP for the two parallel kernels: the candidate
// sweep of the threshold DP and the trial loop of the experiment runner.

#include <benchmark/benchmark.h>

#include "jrpsched/experiment.hpp"
#include "jrpsched/generators.hpp"
#include "jrpsched/offline_solvers.hpp"

using namespace jrpsched;

namespace {

void BM_ThresholdDp(benchmark::State &state, Execution execution) {
    const auto n = state.range(0);
    const Instance inst = validate_instance(gen_geometric(n, 0.05, 7), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(threshold_dp_opt(inst, {kThresholdDpCap, execution}).cost);
    }
    state.SetComplexityN(n);
}

void BM_Experiment(benchmark::State &state, Execution execution) {
    ExperimentConfig config;
    config.kind = GenKind::geometric;
    config.betas = {0.01, 0.1};
    config.ns = {state.range(0)};
    config.replication = 16;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_experiment(config, execution).size());
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_ThresholdDp, serial, Execution::serial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ThresholdDp, openmp, Execution::openmp)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Experiment, serial, Execution::serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Experiment, openmp, Execution::openmp)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
