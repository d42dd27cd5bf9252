// Serial reference vs OpenMP kernels for the Monte Carlo engine.
#include <numbers>

#include <benchmark/benchmark.h>

#include "libnet/kernels.hpp"
#include "libnet/montecarlo.hpp"

namespace
{
libnet::McConfig baseline(int dimension, libnet::Execution exec, std::uint64_t trials)
{
    libnet::McConfig cfg;
    cfg.scenario.dimension = dimension;
    cfg.scenario.channel = libnet::LambertianChannel(std::numbers::pi / 3, 1.0);
    cfg.scenario.rx = {std::numbers::pi / 4, 0.0, 0.0};
    cfg.scenario.lambda = 1.0;
    cfg.trials = trials;
    cfg.seed = 7;
    cfg.execution = exec;
    return cfg;
}

template<libnet::Execution E>
void BM_MeanInterference(benchmark::State& state)
{
    auto const cfg = baseline(static_cast<int>(state.range(0)), E, state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(libnet::empirical_mean_interference(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(1));
}

template<libnet::Execution E>
void BM_Reduce(benchmark::State& state)
{
    auto const cfg = baseline(1, libnet::Execution::parallel, state.range(0));
    auto const samples = libnet::interference_samples(cfg);
    auto const g = [](double x) { return x; };
    for (auto _ : state)
    {
        if constexpr (E == libnet::Execution::parallel)
            benchmark::DoNotOptimize(libnet::kernels::reduce_parallel(samples, g));
        else
            benchmark::DoNotOptimize(libnet::kernels::reduce_serial(samples, g));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
}  // namespace

BENCHMARK(BM_MeanInterference<libnet::Execution::sequential>)
    ->Args({1, 100000})->Args({2, 100000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MeanInterference<libnet::Execution::parallel>)
    ->Args({1, 100000})->Args({2, 100000})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reduce<libnet::Execution::sequential>)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reduce<libnet::Execution::parallel>)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
