#include "canon/compiler.hpp"
#include "canon/linear.hpp"
#include "canon/nonlinear.hpp"
#include "canon/retraction.hpp"
#include "canon/rng.hpp"

#include <benchmark/benchmark.h>

using namespace canon;

static void BM_PairScan(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(nonlinear::conj1_n3_pair_scan(nonlinear::Domain::C));
}
BENCHMARK(BM_PairScan)->Unit(benchmark::kMillisecond);

static void BM_CatalogTwo(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(nonlinear::catalog_maximal(2, nonlinear::Domain::C));
}
BENCHMARK(BM_CatalogTwo)->Unit(benchmark::kMillisecond);

static void BM_MinorScan(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(linear::conj4_exhaustive(static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_MinorScan)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Compile(benchmark::State& st) {
    Rng rng(5);
    std::vector<PolySystem> systems;
    for (int k = 0; k < 16; ++k) systems.push_back(compiler::random_poly_system(rng));
    for (auto _ : st)
        for (auto& s : systems) benchmark::DoNotOptimize(compiler::compile(s));
}
BENCHMARK(BM_Compile)->Unit(benchmark::kMicrosecond);

static void BM_RetractionF2(benchmark::State& st) {
    Rng rng(9);
    std::vector<retraction::Point2> pts(4096);
    for (auto& p : pts) p = {(rng.unit() - 0.5) * 20, (rng.unit() - 0.5) * 20};
    for (auto _ : st)
        for (auto& p : pts) benchmark::DoNotOptimize(retraction::f2(p));
    st.SetItemsProcessed(static_cast<std::int64_t>(st.iterations() * pts.size()));
}
BENCHMARK(BM_RetractionF2);

BENCHMARK_MAIN();
