#include <benchmark/benchmark.h>

#include "cyclocond/cyclopoly.hpp"
#include "cyclocond/distortion.hpp"
#include "cyclocond/vandermonde.hpp"

using namespace cyclocond;

static void BM_Cyclotomic(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        clearCyclotomicCache();
        benchmark::DoNotOptimize(cyclotomic(n));
    }
}
BENCHMARK(BM_Cyclotomic)->Arg(105)->Arg(15015)->Arg(40755)->Arg(255255)->Unit(benchmark::kMillisecond);

static void BM_Oracle(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cyclotomicOracle(n));
}
BENCHMARK(BM_Oracle)->Arg(105)->Arg(15015)->Arg(40755)->Unit(benchmark::kMillisecond);

static void BM_ConditionNumber(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const PrecisionContext ctx(static_cast<unsigned>(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(conditionNumber(n, ctx));
}
BENCHMARK(BM_ConditionNumber)
    ->Args({105, 128})
    ->Args({1155, 128})
    ->Args({1155, 512})
    ->Args({4095, 128})
    ->Unit(benchmark::kMillisecond);

static void BM_ConditionNumberLU(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(conditionNumberLU(n, PrecisionContext(128)));
}
BENCHMARK(BM_ConditionNumberLU)->Arg(105)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Distortion(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(measureDistortion(n, 3.2, 1000, 7, PrecisionContext(128)));
}
BENCHMARK(BM_Distortion)->Arg(105)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
