#include "pipeline.hpp"

#include <charconv>
#include <stdexcept>

#include "netlabel/io.hpp"
#include "netlabel/random.hpp"
#include "netlabel/selection.hpp"

namespace netlabel::app {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

Dataset make_dataset(std::string name, Graph g, Labeling truth) {
    if (g.empty())
        throw GraphError("dataset '" + name + "' has no nodes");
    if (truth.node_count() != g.node_count())
        throw LabelingError("labels of dataset '" + name + "' do not match its graph");
    auto measures = compute_all_measures(g);
    return Dataset{std::move(name), std::move(g), std::move(truth), std::move(measures)};
}

Dataset load_dataset(const DatasetSource &src) {
    if (src.generated) {
        auto gen = generate(*src.generated);
        return make_dataset(src.name, std::move(gen.graph), std::move(gen.truth));
    }
    Graph g = load_edge_list(src.edges, src.directed, src.nodes);
    Labeling truth = load_labels(src.labels, g);
    if (truth.label_count() == 0)
        throw LabelingError("dataset '" + src.name + "' has no labelled nodes");
    return make_dataset(src.name, std::move(g), std::move(truth));
}

std::uint64_t derive_cell_seed(std::uint64_t master_seed, const std::string &dataset, Algorithm algorithm,
                               const Strategy &strategy, double fraction, std::size_t run_index) {
    return SeedHasher(master_seed)
        .add(dataset)
        .add(to_string(algorithm))
        .add(strategy.to_string())
        .add(format_double(fraction))
        .add(static_cast<std::uint64_t>(run_index))
        .value();
}

CellOutcome run_cell(const Dataset &ds, const CellSpec &cell, const RunOptions &opts) {
    if (!(cell.fraction > 0.0 && cell.fraction < 1.0))
        throw std::invalid_argument("fraction must lie strictly between 0 and 1");
    const Graph &g = ds.graph;
    const Labeling &truth = ds.truth;
    Rng rng(cell.seed);

    const std::size_t n = seed_size_for_fraction(cell.fraction, g.node_count());
    const SeedSet seeds = select_seeds(cell.strategy, g, ds.measures, n, rng);

    // Only nodes that carry a ground-truth label can be acquired.
    std::vector<NodeIndex> acquired;
    for (NodeIndex v : seeds.nodes)
        if (truth.is_known(v))
            acquired.push_back(v);
    const Labeling seed = truth.restricted_to(acquired);

    std::vector<NodeIndex> eval_set;
    for (NodeIndex v = 0; v < g.node_count(); ++v)
        if (!seed.is_known(v) && truth.is_known(v))
            eval_set.push_back(v);

    CellOutcome out;
    if (acquired.empty()) {
        // Nothing acquired: every node falls back to the (uniform) prior,
        // whose argmax is the first label.
        out.prediction = Labeling(std::vector<Label>(truth.label_set().begin(), truth.label_set().end()),
                                  std::vector<LabelIndex>(g.node_count(), 0));
    } else if (cell.algorithm == Algorithm::ica) {
        out.prediction = ica_run(g, seed, ds.measures, opts.ica, rng).labels;
    } else {
        auto lbp = lbp_run(g, seed, opts.lbp, opts.laplace);
        out.prediction = std::move(lbp.labels);
        out.beliefs = std::move(lbp.beliefs);
    }

    std::vector<LabelIndex> sample;
    for (NodeIndex v : acquired)
        sample.push_back(truth.at(v));
    std::vector<LabelIndex> full;
    for (LabelIndex l : truth.assignment())
        if (l != kUnlabelled)
            full.push_back(l);

    auto &r = out.result;
    r.dataset = ds.name;
    r.algorithm = cell.algorithm;
    r.strategy = cell.strategy;
    r.fraction = cell.fraction;
    r.run_index = cell.run_index;
    r.error = classification_error(out.prediction, truth, eval_set);
    r.nominal_seed_size = seeds.nominal_size;
    r.realized_seed_size = seeds.realized_size();
    r.uncovered_fraction = uncovered_fraction(seeds, truth);
    r.kl_divergence = kl_divergence(sample, full, truth.label_count(), opts.kl_smoothing);
    return out;
}

} // namespace netlabel::app
