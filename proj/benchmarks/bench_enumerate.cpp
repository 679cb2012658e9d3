#include <benchmark/benchmark.h>

#include "regdec/enumerate.hpp"

using namespace regdec;

static void run(benchmark::State& state, char family, int rank, const char* modulo) {
    const RootSystem rs(make_type(family, rank));
    EnumerationOptions o;
    o.min_blocks = 3;
    o.modulo = parse_equivalence(modulo);
    o.jobs = static_cast<int>(state.range(0));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        auto r = enumerate_regular_partitions(rs, o);
        nodes = r.node_count;
        benchmark::DoNotOptimize(r.classes.data());
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}

static void BM_EnumerateA3(benchmark::State& state) { run(state, 'A', 3, "renumber,sign"); }
static void BM_EnumerateA4(benchmark::State& state) { run(state, 'A', 4, "renumber,sign"); }
static void BM_EnumerateA4Weyl(benchmark::State& state) { run(state, 'A', 4, "renumber,sign,weyl"); }
static void BM_EnumerateB3(benchmark::State& state) { run(state, 'B', 3, "renumber"); }
static void BM_EnumerateD4(benchmark::State& state) { run(state, 'D', 4, "renumber"); }

BENCHMARK(BM_EnumerateA3)->Arg(1);
BENCHMARK(BM_EnumerateA4)->Arg(1)->Arg(2);
BENCHMARK(BM_EnumerateA4Weyl)->Arg(1);
BENCHMARK(BM_EnumerateB3)->Arg(1);
BENCHMARK(BM_EnumerateD4)->Arg(1);

BENCHMARK_MAIN();
