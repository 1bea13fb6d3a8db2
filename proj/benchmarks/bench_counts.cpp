#include "gwtrop/caporaso_harris.hpp"
#include "gwtrop/floor_diagrams.hpp"
#include "gwtrop/lattice_path.hpp"
#include "gwtrop/templates.hpp"

#include <benchmark/benchmark.h>

using namespace gwtrop;

static void BM_LatticePath(benchmark::State& state)
{
    const std::int64_t d = state.range(0);
    const LatticePolygon p = degree_polygon(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_lattice_path(p, 0));
}
BENCHMARK(BM_LatticePath)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_CaporasoHarrisCold(benchmark::State& state)
{
    const std::int64_t d = state.range(0);
    for (auto _ : state) {
        ch_cache_clear();
        benchmark::DoNotOptimize(ch_count({d, 0, {}, Sequence{d}}));
    }
}
BENCHMARK(BM_CaporasoHarrisCold)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_FloorCount(benchmark::State& state)
{
    const std::int64_t d = state.range(0);
    const std::vector<std::int64_t> ones(static_cast<std::size_t>(d), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(floor_count(1, d, ones, {}, 0));
}
BENCHMARK(BM_FloorCount)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_SeveriTemplates(benchmark::State& state)
{
    const std::int64_t delta = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(severi_by_templates(12, delta));
}
BENCHMARK(BM_SeveriTemplates)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_NodePolynomialFit(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_node_polynomial(state.range(0)));
}
BENCHMARK(BM_NodePolynomialFit)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
