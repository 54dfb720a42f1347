#include <benchmark/benchmark.h>

#include <random>

#include "nanoban/series.hpp"

using namespace nanoban;

namespace {

MultiSeries dense_block(std::mt19937_64& rng, const std::vector<VarSpec>& vars,
                        std::int64_t spread) {
    MultiSeries s(vars);
    std::uniform_int_distribution<long> cd(-9, 9);
    for (std::int64_t i = -spread; i <= spread; ++i)
        for (std::int64_t j = -spread; j <= spread; ++j)
            s.add_term({i, j}, Rat(cd(rng)));
    return s;
}

} // namespace

static void BM_SeriesMul(benchmark::State& state) {
    const std::int64_t spread = state.range(0);
    std::vector<VarSpec> vars{var("q", -4 * spread, 4 * spread),
                              var("y", -4 * spread, 4 * spread)};
    std::mt19937_64 rng(42);
    const MultiSeries a = dense_block(rng, vars, spread);
    const MultiSeries b = dense_block(rng, vars, spread);
    for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
    state.SetItemsProcessed(state.iterations() *
                            static_cast<std::int64_t>(a.size() * b.size()));
}
BENCHMARK(BM_SeriesMul)->Arg(4)->Arg(8)->Arg(12);

static void BM_SeriesExp(benchmark::State& state) {
    const std::int64_t cap = state.range(0);
    std::vector<VarSpec> vars{var("q", 0, cap), var("y", 0, cap)};
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> cd(-5, 5);
    MultiSeries x(vars);
    for (std::int64_t i = 1; i <= cap; ++i)
        for (std::int64_t j = 0; j + i <= cap; ++j) x.add_term({i, j}, Rat(cd(rng)));
    for (auto _ : state) benchmark::DoNotOptimize(exp(x));
}
BENCHMARK(BM_SeriesExp)->Arg(6)->Arg(10);

static void BM_SeriesInverse(benchmark::State& state) {
    const std::int64_t cap = state.range(0);
    std::vector<VarSpec> vars{var("q", 0, cap)};
    MultiSeries u = MultiSeries::constant(vars, Rat(1));
    for (std::int64_t i = 1; i <= cap; ++i) u.add_term({i}, Rat(i % 5 - 2));
    for (auto _ : state) benchmark::DoNotOptimize(inverse(u, {0}));
}
BENCHMARK(BM_SeriesInverse)->Arg(32)->Arg(128);
