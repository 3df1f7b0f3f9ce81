#include <benchmark/benchmark.h>

#include "hamiltonica/checks.hpp"
#include "hamiltonica/constructions.hpp"
#include "hamiltonica/factors.hpp"
#include "hamiltonica/ham.hpp"
#include "hamiltonica/small_graphs.hpp"

using namespace hamiltonica;

static void BM_tree_family_solve(benchmark::State& state) {
    int m = (int)state.range(0);
    Graph p = cartesian_product(build_t_delta(3), path_graph(m));
    for (auto _ : state) {
        auto v = find_hamiltonian_cycle(p);
        benchmark::DoNotOptimize(v.stats.nodes_explored);
    }
    state.counters["vertices"] = p.vertex_count();
}
BENCHMARK(BM_tree_family_solve)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_positive_solve(benchmark::State& state) {
    int n = (int)state.range(0);
    Graph p = cartesian_product(double_star(), path_graph(n));
    for (auto _ : state) {
        auto v = find_hamiltonian_cycle(p);
        benchmark::DoNotOptimize(v.outcome);
    }
}
BENCHMARK(BM_positive_solve)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_strip_cover_backtracking(benchmark::State& state) {
    int n = (int)state.range(0);
    Graph g = cartesian_product(path_graph(3), path_graph(n));
    auto c = strip_tail_constraint(n, 3);
    for (auto _ : state) {
        auto cnt = enumerate_path_covers(g, c);
        benchmark::DoNotOptimize(cnt.count);
    }
}
BENCHMARK(BM_strip_cover_backtracking)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_strip_cover_dp(benchmark::State& state) {
    int n = (int)state.range(0);
    auto c = strip_tail_constraint(n, 3);
    for (auto _ : state) {
        auto cnt = count_path_covers_strip(3, n, c);
        benchmark::DoNotOptimize(cnt);
    }
}
BENCHMARK(BM_strip_cover_dp)->Arg(5)->Arg(9)->Unit(benchmark::kMicrosecond);

static void BM_connected_graph_enum(benchmark::State& state) {
    int n = (int)state.range(0);
    for (auto _ : state) {
        auto gs = connected_graphs_upto_iso(n);
        benchmark::DoNotOptimize(gs.size());
    }
}
BENCHMARK(BM_connected_graph_enum)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
