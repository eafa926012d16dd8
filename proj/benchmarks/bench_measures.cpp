#include <benchmark/benchmark.h>

#include "netlabel/measures.hpp"
#include "netlabel/netgen.hpp"
#include "netlabel/selection.hpp"

using namespace netlabel;

namespace {

Graph small_world(std::size_t n) {
    return generate({GenKind::small_world, n, 4, 0.0, 0.0, 8, 0.1, 0.0, 1}).graph;
}

} // namespace

static void BM_Betweenness(benchmark::State &state) {
    const Graph g = small_world(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(betweenness(g));
}
BENCHMARK(BM_Betweenness)->Arg(100)->Arg(300)->Arg(1000);

static void BM_PageRank(benchmark::State &state) {
    const Graph g = small_world(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(pagerank(g));
}
BENCHMARK(BM_PageRank)->Arg(300)->Arg(3000);

static void BM_Hits(benchmark::State &state) {
    const Graph g = small_world(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hits(g));
}
BENCHMARK(BM_Hits)->Arg(300)->Arg(3000);

static void BM_AllMeasures(benchmark::State &state) {
    const Graph g = small_world(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_all_measures(g));
}
BENCHMARK(BM_AllMeasures)->Arg(300);

static void BM_NeighbourSelection(benchmark::State &state) {
    const Graph g = small_world(1000);
    const Ranking r = rank_nodes(ScoreVector{Measure::pagerank, pagerank(g)}, Direction::top);
    for (auto _ : state) {
        Rng rng(7);
        benchmark::DoNotOptimize(select_neighbour(r, g, 300, rng));
    }
}
BENCHMARK(BM_NeighbourSelection);
