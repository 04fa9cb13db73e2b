#include <benchmark/benchmark.h>

#include <random>

#include "wdc/weightset.hpp"

namespace {

wdc::WeightSet random_set(int n_max, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    wdc::WeightSet e(n_max);
    for (int w = 0; w <= n_max; ++w)
        if (rng() & 1)
            e.set(w);
    return e;
}

void BM_FillClosure(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const wdc::WeightSet e = random_set(n, 0x77dcbe9c);
    const int d = n / 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(wdc::fill_closure(d, e));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FillClosure)->RangeMultiplier(10)->Range(10000, 1000000)->Complexity(benchmark::oN);

void BM_FillClosureNaive(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const wdc::WeightSet e = random_set(n, 0x77dcbe9c);
    const int d = n / 2;
    for (auto _ : state)
        benchmark::DoNotOptimize(wdc::fill_closure_naive(d, e));
}
BENCHMARK(BM_FillClosureNaive)->Arg(10000)->Arg(100000);

void BM_FillStep(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const wdc::WeightSet e = random_set(n, 0x77dcbe9d);
    const int d = n / 4;
    for (auto _ : state)
        benchmark::DoNotOptimize(wdc::fill_step(d, e));
}
BENCHMARK(BM_FillStep)->Arg(10000)->Arg(1000000);

} // namespace

BENCHMARK_MAIN();
