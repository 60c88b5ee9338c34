#include "canon/groebner.hpp"
#include "canon/matrix.hpp"
#include "canon/nonlinear.hpp"
#include "canon/number_theory.hpp"
#include "canon/rng.hpp"
#include "canon/solve.hpp"

#include <benchmark/benchmark.h>

using namespace canon;

static void BM_BareissDet(benchmark::State& st) {
    auto n = static_cast<std::size_t>(st.range(0));
    Rng rng(1);
    algebra::RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.rational(50, 7);
    for (auto _ : st) benchmark::DoNotOptimize(algebra::bareiss_det(m));
}
BENCHMARK(BM_BareissDet)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_GroebnerChain(benchmark::State& st) {
    auto polys = algebra::system_polys(nonlinear::chain_21d(static_cast<unsigned>(st.range(0))));
    for (auto _ : st)
        benchmark::DoNotOptimize(algebra::buchberger(polys, algebra::MonomialOrder::GrevLex));
}
BENCHMARK(BM_GroebnerChain)->DenseRange(3, 6);

static void BM_EnumerateChain(benchmark::State& st) {
    auto sys = nonlinear::chain_21d(static_cast<unsigned>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(algebra::enumerate_solutions(sys));
}
BENCHMARK(BM_EnumerateChain)->DenseRange(3, 5);

static void BM_PellMin(benchmark::State& st) {
    std::vector<BigInt> ds;
    for (long d = 2; d <= st.range(0); ++d)
        if (algebra::is_squarefree(BigInt(d))) ds.emplace_back(d);
    for (auto _ : st)
        for (auto& d : ds) benchmark::DoNotOptimize(algebra::pell_min(d));
}
BENCHMARK(BM_PellMin)->Arg(100)->Arg(1000);

static void BM_Factorize(benchmark::State& st) {
    BigInt n("1000000016000000063");  // 1000000007 * 1000000009
    for (auto _ : st) benchmark::DoNotOptimize(algebra::factorize(n));
}
BENCHMARK(BM_Factorize);
