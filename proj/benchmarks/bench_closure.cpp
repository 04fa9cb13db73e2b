#include <benchmark/benchmark.h>

#include "wdc/algebra_oracle.hpp"
#include "wdc/hyperplane_oracle.hpp"

namespace {

void BM_ZStarClosureCube(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const wdc::Grid g = wdc::Grid::cube(n);
    const wdc::WeightSet e = wdc::two_tails(n, n / 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(wdc::algebra::z_star_closure(g, n / 2, e));
}
BENCHMARK(BM_ZStarClosureCube)->DenseRange(3, 6);

void BM_EnumerateSectionsCube(benchmark::State& state)
{
    const wdc::Grid g = wdc::Grid::cube(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(wdc::hyper::enumerate_sections(g));
}
BENCHMARK(BM_EnumerateSectionsCube)->DenseRange(2, 4);

void BM_EhcOracleCube4(benchmark::State& state)
{
    const wdc::Grid g = wdc::Grid::cube(4);
    const wdc::hyper::SectionSet ss = wdc::hyper::enumerate_sections(g);
    const wdc::WeightSet tails = wdc::two_tails(4, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(wdc::hyper::ehc_oracle(ss, tails));
}
BENCHMARK(BM_EhcOracleCube4);

} // namespace
