#include <benchmark/benchmark.h>

#include "touchard/exact_core.hpp"
#include "touchard/modular.hpp"
#include "touchard/partition_oracle.hpp"
#include "touchard/shift_poly.hpp"

namespace {

using namespace touchard;

void BM_BellBinomial(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_bell_binomial(n));
    }
}
BENCHMARK(BM_BellBinomial)->Arg(100)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Stirling(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_stirling(n));
    }
}
BENCHMARK(BM_Stirling)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ShiftPolyRecursive(benchmark::State& state) {
    const auto j = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(shift_poly_recursive(j));
    }
}
BENCHMARK(BM_ShiftPolyRecursive)->Arg(20)->Arg(100);

void BM_BellModStream(benchmark::State& state) {
    const auto seeds = bell_seeds(13, build_bell_binomial(12));
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bell_mod_p_stream(13, n, seeds));
    }
}
BENCHMARK(BM_BellModStream)->Arg(2000)->Arg(1000000);

void BM_EnumeratePartitions(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_partition(n, [&](const SetPartition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_OrbitDecomposition(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(orbit_decomposition(n));
    }
}
BENCHMARK(BM_OrbitDecomposition)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
