#include "netlabel/ica.hpp"

#include <vector>

#include "netlabel/features.hpp"

namespace netlabel {

IcaResult ica_run(const Graph &g, const Labeling &seed, const MeasureTable &measures, const IcaConfig &cfg,
                  Rng &rng) {
    if (seed.node_count() != g.node_count())
        throw InferenceError("seed labeling does not match the graph");
    const auto known = seed.known();
    if (known.empty())
        throw InferenceError("ICA needs at least one known label");
    const auto unknown = seed.unknown();
    if (unknown.empty())
        return IcaResult{seed, 0, true};

    const std::size_t L = seed.label_count();
    const std::size_t d = feature_count(L);
    const auto seed_view = seed.assignment();

    TrainingSet train{d, {}, {}};
    std::vector<double> x(d);
    for (NodeIndex v : known) {
        extract_features(g, seed_view, L, v, measures, x);
        train.add(x, seed.at(v));
    }
    const auto model = LocalClassifier::train(train, L, cfg.classifier, rng);

    // Bootstrap: features see only the seed labels.
    std::vector<LabelIndex> current(seed_view.begin(), seed_view.end());
    std::vector<LabelIndex> bootstrap(unknown.size());
    for (std::size_t i = 0; i < unknown.size(); ++i) {
        extract_features(g, seed_view, L, unknown[i], measures, x);
        bootstrap[i] = model.predict(x);
    }
    for (std::size_t i = 0; i < unknown.size(); ++i)
        current[unknown[i]] = bootstrap[i];

    IcaResult result;
    std::vector<NodeIndex> order = unknown;
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        shuffle(std::span<NodeIndex>(order), rng);
        bool changed = false;
        for (NodeIndex v : order) {
            extract_features(g, current, L, v, measures, x);
            const LabelIndex l = model.predict(x);
            if (l != current[v]) {
                current[v] = l;
                changed = true;
            }
        }
        result.iterations = iter + 1;
        if (!changed) {
            result.converged = true;
            break;
        }
    }
    result.labels = Labeling(std::vector<Label>(seed.label_set().begin(), seed.label_set().end()), std::move(current));
    return result;
}

IcaResult ica_run(const Graph &g, const Labeling &seed, const IcaConfig &cfg, Rng &rng) {
    return ica_run(g, seed, compute_all_measures(g), cfg, rng);
}

} // namespace netlabel
