#include <benchmark/benchmark.h>

#include "knotpoly/knot_table.hpp"
#include "knotpoly/random_diagrams.hpp"
#include "knotpoly/skein.hpp"
#include "knotpoly/verify.hpp"

using namespace knotpoly;

namespace {

const KnotTable& table() {
    static const KnotTable t = KnotTable::load(default_table_path());
    return t;
}

// Cold evaluation: a fresh memo per iteration.
void BM_TableKnot(benchmark::State& state, const char* name) {
    Diagram d = table().diagram(name);
    for (auto _ : state) {
        SkeinContext ctx;
        benchmark::DoNotOptimize(conway(d, ctx));
        state.counters["nodes"] = static_cast<double>(ctx.stats().nodes_expanded);
    }
}
BENCHMARK_CAPTURE(BM_TableKnot, trefoil, "3_1");
BENCHMARK_CAPTURE(BM_TableKnot, knot_8_19, "8_19");
BENCHMARK_CAPTURE(BM_TableKnot, knot_10_148, "10_148");
BENCHMARK_CAPTURE(BM_TableKnot, link_6_2_3, "6^2_3");

void BM_Torus(benchmark::State& state) {
    Diagram d = torus2_diagram(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        SkeinContext ctx;
        benchmark::DoNotOptimize(conway(d, ctx));
        state.counters["nodes"] = static_cast<double>(ctx.stats().nodes_expanded);
    }
}
BENCHMARK(BM_Torus)->DenseRange(3, 15, 4);

void BM_TorusNoSimplify(benchmark::State& state) {
    Diagram d = torus2_diagram(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        SkeinContext ctx;
        ctx.set_simplify(false);
        benchmark::DoNotOptimize(conway(d, ctx));
    }
}
BENCHMARK(BM_TorusNoSimplify)->DenseRange(3, 11, 4);

void BM_Kn(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Diagram d = connected_sum(torus2_diagram(2 * n + 3), 1, mirror(torus2_diagram(2 * n + 1)), 1);
    for (auto _ : state) {
        SkeinContext ctx;
        benchmark::DoNotOptimize(conway(d, ctx));
    }
}
BENCHMARK(BM_Kn)->DenseRange(1, 3);

void BM_RandomDiagrams(benchmark::State& state) {
    RandomDiagrams gen(7);
    std::vector<Diagram> ds;
    for (int i = 0; i < 100; ++i) ds.push_back(gen.any(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        SkeinContext ctx;
        for (const Diagram& d : ds) benchmark::DoNotOptimize(conway(d, ctx));
    }
}
BENCHMARK(BM_RandomDiagrams)->Arg(8)->Arg(12);

void BM_Recurrences(benchmark::State& state) {
    int bound = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_recurrences(bound, bound, bound));
}
BENCHMARK(BM_Recurrences)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_TheoremSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(theorem_sum_check(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TheoremSweep)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
