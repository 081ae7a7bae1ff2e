#include <benchmark/benchmark.h>

#include "kummer/bernoulli.hpp"
#include "kummer/pairs.hpp"
#include "kummer/zeta.hpp"

using namespace kummer;

static void BM_NumeratorViaZeta(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(numerator_via_zeta(n));
}
BENCHMARK(BM_NumeratorViaZeta)->Arg(1000)->Arg(5000)->Arg(10000)->Arg(37580)->Unit(benchmark::kMillisecond);

static void BM_TangentRecurrence(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bernoulli_recurrence(n));
}
BENCHMARK(BM_TangentRecurrence)->Arg(100)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

// Bernoulli numbers come from the warm global cache after the first iteration.
static void BM_LiftToOrder(benchmark::State& state) {
    const auto r = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lift_with_shift(IrregularPair(37, 32), r));
}
BENCHMARK(BM_LiftToOrder)->Arg(10)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_ChiZero(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(chi_zero(37, 32, n));
}
BENCHMARK(BM_ChiZero)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_ScanPrime(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan_irregular(p));
}
BENCHMARK(BM_ScanPrime)->Arg(101)->Arg(691)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
