#include <benchmark/benchmark.h>

#include "regdec/regular_partition.hpp"
#include "regdec/weyl.hpp"

using namespace regdec;

static void BM_WeylElements(benchmark::State& state) {
    const RootSystem rs(make_type('A', static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(weyl_group_elements(rs).size());
}

static void BM_CanonicalizeWeyl(benchmark::State& state) {
    const RootSystem rs(make_type('A', static_cast<int>(state.range(0))));
    const auto p = finest_partition(rs, Orientation::row);
    const auto e = parse_equivalence("renumber,sign,weyl");
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(rs, p, e).blocks.size());
}

BENCHMARK(BM_WeylElements)->DenseRange(2, 5);
BENCHMARK(BM_CanonicalizeWeyl)->DenseRange(2, 4);

BENCHMARK_MAIN();
