#include <benchmark/benchmark.h>

#include "netlabel/ica.hpp"
#include "netlabel/lbp.hpp"
#include "netlabel/netgen.hpp"
#include "netlabel/selection.hpp"

using namespace netlabel;

namespace {

struct Problem {
    Graph graph;
    Labeling seed;
};

Problem planted(std::size_t n, double fraction) {
    GeneratedGraph g = generate({GenKind::planted_partition, n, 4, 0.1, 0.01, 4, 0.0, 0.0, 2});
    Rng rng(3);
    const SeedSet s = select_random(g.graph, seed_size_for_fraction(fraction, n), rng);
    Labeling seed = g.truth.restricted_to(s.nodes);
    return {std::move(g.graph), std::move(seed)};
}

} // namespace

static void BM_Lbp(benchmark::State &state) {
    const Problem p = planted(static_cast<std::size_t>(state.range(0)), 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(lbp_run(p.graph, p.seed));
}
BENCHMARK(BM_Lbp)->Arg(200)->Arg(1000);

static void BM_IcaNaiveBayes(benchmark::State &state) {
    const Problem p = planted(static_cast<std::size_t>(state.range(0)), 0.2);
    IcaConfig cfg;
    cfg.classifier.kind = ClassifierKind::naive_bayes;
    for (auto _ : state) {
        Rng rng(1);
        benchmark::DoNotOptimize(ica_run(p.graph, p.seed, cfg, rng));
    }
}
BENCHMARK(BM_IcaNaiveBayes)->Arg(200)->Arg(1000);

static void BM_IcaForest(benchmark::State &state) {
    const Problem p = planted(200, 0.2);
    for (auto _ : state) {
        Rng rng(1);
        benchmark::DoNotOptimize(ica_run(p.graph, p.seed, IcaConfig{}, rng));
    }
}
BENCHMARK(BM_IcaForest)->Unit(benchmark::kMillisecond);
