#include <benchmark/benchmark.h>

#include "nanoban/coeff_table.hpp"
#include "nanoban/dt.hpp"
#include "nanoban/gwgv.hpp"
#include "nanoban/qforms.hpp"

using namespace nanoban;

static void BM_CoeffTable(benchmark::State& state) {
    const std::int64_t a_max = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(build_coeff_table(a_max, 2 * a_max));
}
BENCHMARK(BM_CoeffTable)->Arg(8)->Arg(12)->Arg(16);

static void BM_ZNano(benchmark::State& state) {
    static const CoeffTable table = build_coeff_table(16, 48);
    const auto& m = model_for(static_cast<int>(state.range(0)));
    const TruncationCaps caps{8, 3, 3, 9};
    for (auto _ : state) benchmark::DoNotOptimize(z_nano(m, table, caps));
}
BENCHMARK(BM_ZNano)->Arg(5)->Arg(6)->Arg(8)->Arg(9);

static void BM_EtaProduct(benchmark::State& state) {
    const auto spec = eta_spec_weight4(model_for(6));
    const std::int64_t cap = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(eta_product(spec, cap));
}
BENCHMARK(BM_EtaProduct)->Arg(2000)->Arg(20000);

static void BM_Psi(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(psi(g, 12, 14));
}
BENCHMARK(BM_Psi)->Arg(1)->Arg(3)->Arg(5);

static void BM_GvTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gv_table(state.range(0)));
}
BENCHMARK(BM_GvTable)->Arg(12)->Arg(20);
