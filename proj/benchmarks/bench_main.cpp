#include <benchmark/benchmark.h>

#include <random>

#include "braidrep/random_words.hpp"
#include "braidrep/representations.hpp"
#include "braidrep/rewriting.hpp"

using namespace braidrep;

static void BM_Multiply(benchmark::State& state)
{
    const auto& A = Alphabet::get({{Family::x, 6}});
    std::mt19937_64 rng(1);
    auto len = static_cast<std::size_t>(state.range(0));
    auto u = random_reduced_word(A, len, rng), v = random_reduced_word(A, len, rng);
    for (auto _ : state) benchmark::DoNotOptimize(u * v);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Multiply)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

static void BM_ApplyArtin(benchmark::State& state)
{
    auto artin = artin_rep(6);
    std::mt19937_64 rng(2);
    auto f = evaluate(artin, random_word(artin.source().generators(), 30, rng));
    auto u = random_reduced_word(artin.target(), static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(apply(f, u));
}
BENCHMARK(BM_ApplyArtin)->Range(8, 512);

static void BM_EvaluateFullTwist(benchmark::State& state)
{
    auto n = static_cast<int>(state.range(0));
    auto artin = artin_rep(n);
    auto w = full_twist_word(n);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(artin, w));
}
BENCHMARK(BM_EvaluateFullTwist)->DenseRange(3, 7);

static void BM_VerifyRhoU(benchmark::State& state)
{
    auto n = static_cast<int>(state.range(0));
    auto rep = rho_u(n, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(verify_representation(rep));
}
BENCHMARK(BM_VerifyRhoU)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_VerifyRhoW(benchmark::State& state)
{
    auto rep = rho_w(static_cast<int>(state.range(0)), 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(verify_representation(rep));
}
BENCHMARK(BM_VerifyRhoW)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_RhoVOuterCheck(benchmark::State& state)
{
    auto n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rho_v_outer_check(n, 2));
}
BENCHMARK(BM_RhoVOuterCheck)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_ArtinCheck(benchmark::State& state)
{
    auto n = static_cast<int>(state.range(0));
    auto artin = artin_rep(n);
    std::mt19937_64 rng(3);
    auto f = evaluate(artin, random_word(artin.source().generators(), 30, rng));
    auto P = generator_product(n);
    for (auto _ : state) benchmark::DoNotOptimize(artin_condition_check(f, P));
}
BENCHMARK(BM_ArtinCheck)->DenseRange(2, 6, 2);

static void BM_Rewrite(benchmark::State& state)
{
    Transversal t(surface_braid_presentation(static_cast<int>(state.range(0)), 1, 2));
    std::mt19937_64 rng(4);
    auto u = random_subgroup_word(t, 60, rng);
    for (auto _ : state) benchmark::DoNotOptimize(rewrite(t, u));
}
BENCHMARK(BM_Rewrite)->DenseRange(3, 5);

static void BM_RelatorTable(benchmark::State& state)
{
    Transversal t(surface_braid_presentation(static_cast<int>(state.range(0)), 1, 2));
    auto w = rho_u(static_cast<int>(state.range(0)) + 1, 1, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rewrite_relator_table(t, w));
}
BENCHMARK(BM_RelatorTable)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
