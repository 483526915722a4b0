#include "isharp/isharp.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace isharp;

static void BM_Rank(benchmark::State& state)
{
    const size_t n = static_cast<size_t>(state.range(0));
    auto sp = std::make_shared<GradedSpace>();
    for (size_t i = 0; i < n; ++i)
        sp->add({"g" + std::to_string(i), 0, 0});
    SparseExactMap f(sp, sp);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> val(-4, 4);
    for (size_t j = 0; j < n; ++j)
        for (int k = 0; k < 4; ++k)
            f.add(rng() % n, j, make_scalar(val(rng), 1 + k));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(f));
}
BENCHMARK(BM_Rank)->Arg(32)->Arg(128)->Arg(256);

static void BM_SurgeryTorus(benchmark::State& state)
{
    auto k = catalog_knot("T(2,11)");
    for (auto _ : state)
        benchmark::DoNotOptimize(surgery_cone_dim(k, 7, 3));
}
BENCHMARK(BM_SurgeryTorus);

static void BM_SurgeryCached(benchmark::State& state)
{
    auto k = catalog_knot("T(2,11)");
    KnotConeData data(k);
    for (auto _ : state)
        benchmark::DoNotOptimize(surgery_cone_dim(data, 7, 3));
}
BENCHMARK(BM_SurgeryCached);

static void BM_CircleBundleCone(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(circle_bundle_dim_cone(3, state.range(0)));
}
BENCHMARK(BM_CircleBundleCone)->Arg(1)->Arg(4)->Arg(7);

BENCHMARK_MAIN();
