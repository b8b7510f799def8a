#include "amo/combinatorics.hpp"
#include "amo/continuants.hpp"
#include "amo/identities.hpp"
#include "amo/rational_function.hpp"
#include "amo/spectrum.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace amo;

static void BM_RationalProduct(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        RationalFunction r(1);
        for (int i = 1; i <= n; ++i)
            r = r * (rf_term(i) * rf_term(i + 1)).inverse();
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RationalProduct)->Arg(8)->Arg(16)->Arg(32);

static void BM_CyclicFamilySum(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    const auto a = random_rationals(static_cast<std::size_t>(n), rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(family_sum(FamilyKind::Cyclic, std::span<const BigQ>(a), n / 3, BigQ(1)));
}
BENCHMARK(BM_CyclicFamilySum)->Arg(12)->Arg(18)->Arg(24);

static void BM_MainTheoremExact(benchmark::State& state)
{
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(main_theorem_exact(q, q / 3));
}
BENCHMARK(BM_MainTheoremExact)->Arg(12)->Arg(18)->Arg(24);

static void BM_Thm12(benchmark::State& state)
{
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(check_thm12(4, q));
}
BENCHMARK(BM_Thm12)->Arg(10)->Arg(20)->Arg(30);

static void BM_DeltaTransfer(benchmark::State& state)
{
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_transfer({1, q}, 2.0));
}
BENCHMARK(BM_DeltaTransfer)->Arg(10)->Arg(25)->Arg(50);

static void BM_Charpoly(benchmark::State& state)
{
    const int q = static_cast<int>(state.range(0));
    const ComplexMatrix h = build_h({{1, q}, 2.0, {0.6, 0.8}, {0.0, 1.0}});
    for (auto _ : state)
        benchmark::DoNotOptimize(charpoly(h));
}
BENCHMARK(BM_Charpoly)->Arg(8)->Arg(32)->Arg(64);

static void BM_Bands(benchmark::State& state)
{
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(bands({1, q}, 2.0));
}
BENCHMARK(BM_Bands)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

static void BM_Butterfly(benchmark::State& state)
{
    ButterflyConfig cfg;
    cfg.q_max = static_cast<int>(state.range(0));
    cfg.jobs = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(butterfly(cfg));
}
BENCHMARK(BM_Butterfly)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
