#include <benchmark/benchmark.h>

#include "sset/homotopy.hpp"
#include "sset/standard.hpp"

using namespace sset;

static void BM_NormalFormAction(benchmark::State& state)
{
    Presentation d3 = standard_simplex(3);
    std::vector<NormalSimplex> elems = d3.enumerate_degree(static_cast<int>(state.range(0)));
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        for (const NormalSimplex& z : elems)
            for (int i = 0; i <= n; ++i) benchmark::DoNotOptimize(d3.face(z, i));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elems.size()) *
                            (state.range(0) + 1));
}
BENCHMARK(BM_NormalFormAction)->Arg(3)->Arg(5)->Arg(7);

static void BM_EnumerateDegree(benchmark::State& state)
{
    Presentation d = standard_simplex(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(d.enumerate_degree(6));
}
BENCHMARK(BM_EnumerateDegree)->Arg(2)->Arg(3)->Arg(4);

static void BM_Product(benchmark::State& state)
{
    Presentation a = standard_simplex(static_cast<int>(state.range(0)));
    Presentation b = standard_simplex(2);
    for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}
BENCHMARK(BM_Product)->Arg(1)->Arg(2)->Arg(3);

static void BM_SolveHornLift(benchmark::State& state)
{
    Presentation d2 = standard_simplex(2);
    Presentation pt = terminal_point();
    SimplicialMap incl = inclusion_by_names(standard_horn(2, 1), d2);
    LiftingSquare sq{incl, terminal_map(d2, pt), incl, terminal_map(d2, pt)};
    for (auto _ : state) benchmark::DoNotOptimize(solve_lift(sq, Budget(1'000'000)));
}
BENCHMARK(BM_SolveHornLift);

static void BM_EnumerateMaps(benchmark::State& state)
{
    Presentation bd = standard_boundary(2);
    Presentation d2 = standard_simplex(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_maps(bd, d2, Budget(1'000'000)));
}
BENCHMARK(BM_EnumerateMaps);

static void BM_HomotopySet(benchmark::State& state)
{
    Presentation pt = terminal_point();
    Presentation d2 = standard_simplex(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(homotopy_set(pt, d2, Budget(1'000'000)));
}
BENCHMARK(BM_HomotopySet);

BENCHMARK_MAIN();
