// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare
// team sizes; on one core the two columns mostly measure scheduling overhead.

#include "wigner/harness.hpp"
#include "wigner/moments.hpp"
#include "wigner/reference.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace wigner;

const EntryDistribution kGaussian{EntryLaw::gaussian};

void BM_SampleParallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(sample_wigner(n, kGaussian, seed++));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * (n + 1) / 2));
}

void BM_SampleSerial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(reference::sample_wigner(n, kGaussian, seed++));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * (n + 1) / 2));
}

void BM_TraceDirectParallel(benchmark::State& state) {
    const MomentTable table(kGaussian);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto k = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(trace_moment_direct(n, k, table));
}

void BM_TraceDirectSerial(benchmark::State& state) {
    const MomentTable table(kGaussian);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto k = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(reference::trace_moment_direct(n, k, table));
}

ExperimentConfig monte_carlo_config(std::size_t n) {
    ExperimentConfig c;
    c.dimensions = {n};
    c.replicas = 32;
    c.seed = 7;
    c.powers = {2, 4};
    c.edge_times = {1.0};
    return c;
}

void BM_MonteCarloParallel(benchmark::State& state) {
    const auto config = monte_carlo_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(run_monte_carlo(config));
}

void BM_MonteCarloSerial(benchmark::State& state) {
    const auto config = monte_carlo_config(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::run_monte_carlo(config));
}

} // namespace

BENCHMARK(BM_SampleParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SampleSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TraceDirectParallel)->Args({6, 8})->Args({10, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceDirectSerial)->Args({6, 8})->Args({10, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
