#include <benchmark/benchmark.h>

#include "regdec/decomposition.hpp"

using namespace regdec;

static RegularDecomposition k1k_for(const RootSystem& rs) {
    std::vector<int> parts(static_cast<std::size_t>(rs.rank()), 1);
    return construct_k1k(rs, IntPartition(parts));
}

static void BM_VerifyMatrix(benchmark::State& state) {
    const RootSystem rs(make_type('A', static_cast<int>(state.range(0))));
    const auto d = k1k_for(rs);
    for (auto _ : state) benchmark::DoNotOptimize(is_regular_decomposition(rs, d).valid);
}

static void BM_VerifyStructural(benchmark::State& state) {
    const RootSystem rs(make_type('A', static_cast<int>(state.range(0))));
    const auto d = k1k_for(rs);
    for (auto _ : state) benchmark::DoNotOptimize(verify_structural(rs, d).valid);
}

BENCHMARK(BM_VerifyMatrix)->DenseRange(2, 5);
BENCHMARK(BM_VerifyStructural)->DenseRange(2, 5);

BENCHMARK_MAIN();
