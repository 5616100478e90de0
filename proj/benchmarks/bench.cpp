#include <benchmark/benchmark.h>

#include "numerosity/axioms.hpp"
#include "numerosity/dsl.hpp"
#include "numerosity/series.hpp"

using namespace numerosity;

static void BM_Restrict(benchmark::State& state) {
    const auto x = parse_expr("perm(N^2 \\ diag(2), rev) | N^1 * diag(2)");
    const auto f = FiniteSupport::interval(0, static_cast<Natural>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(restrict(x, f));
}
BENCHMARK(BM_Restrict)->Arg(4)->Arg(8)->Arg(16);

static void BM_Count(benchmark::State& state) {
    const auto x = parse_expr("perm(N^2 \\ diag(2), rev) | N^1 * diag(2)");
    const auto f = FiniteSupport::interval(0, static_cast<Natural>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(count(x, f));
}
BENCHMARK(BM_Count)->Arg(4)->Arg(8)->Arg(16);

static void BM_CharSeries(benchmark::State& state) {
    const auto x = PointSetExpr::full_space(3);
    const TruncationWindow w{FiniteSupport::interval(0, static_cast<Natural>(state.range(0))), 3};
    for (auto _ : state) benchmark::DoNotOptimize(char_series(x, w));
}
BENCHMARK(BM_CharSeries)->Arg(3)->Arg(6)->Arg(9);

static void BM_SeriesMul(benchmark::State& state) {
    const TruncationWindow w{FiniteSupport::interval(0, static_cast<Natural>(state.range(0))), 2};
    const auto s = char_series(PointSetExpr::full_space(2), w);
    for (auto _ : state) benchmark::DoNotOptimize(s * s);
}
BENCHMARK(BM_SeriesMul)->Arg(3)->Arg(6);

static void BM_Mobius(benchmark::State& state) {
    const auto f = FiniteSupport::interval(0, static_cast<Natural>(state.range(0) - 1));
    SubsetFunction g;
    for (const auto& e : subsets_of(f)) g[e] = static_cast<long>(e.size() * e.size());
    for (auto _ : state) benchmark::DoNotOptimize(mobius_invert(g, f));
}
BENCHMARK(BM_Mobius)->Arg(6)->Arg(10)->Arg(12);

static void BM_Harness(benchmark::State& state) {
    const auto catalog = default_catalog();
    CheckContext ctx;
    for (auto _ : state) benchmark::DoNotOptimize(run_catalog(catalog, ctx, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Harness)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
