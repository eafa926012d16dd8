#include "netlabel/features.hpp"

#include <algorithm>
#include <stdexcept>

namespace netlabel {

namespace {

void fill_block(std::span<const LabelIndex> current, std::size_t label_count,
                std::span<const NodeIndex> adj, std::span<double> counts, std::span<double> fractions) {
    std::fill(counts.begin(), counts.end(), 0.0);
    std::fill(fractions.begin(), fractions.end(), 0.0);
    double labelled = 0.0;
    for (NodeIndex u : adj) {
        const LabelIndex l = current[u];
        if (l == kUnlabelled)
            continue;
        counts[static_cast<std::size_t>(l)] += 1.0;
        labelled += 1.0;
    }
    if (labelled > 0.0)
        for (std::size_t l = 0; l < label_count; ++l)
            fractions[l] = counts[l] / labelled;
}

} // namespace

std::size_t feature_count(std::size_t label_count) {
    return 4 * label_count + kAllMeasures.size();
}

void extract_features(const Graph &g, std::span<const LabelIndex> current, std::size_t label_count, NodeIndex v,
                      const MeasureTable &measures, std::span<double> out) {
    const std::size_t L = label_count;
    if (out.size() != feature_count(L))
        throw std::invalid_argument("feature buffer has the wrong length");
    fill_block(current, L, g.neighbours(v, NeighbourMode::in), out.subspan(0, L), out.subspan(L, L));
    fill_block(current, L, g.neighbours(v, NeighbourMode::out), out.subspan(2 * L, L), out.subspan(3 * L, L));
    for (std::size_t m = 0; m < measures.size(); ++m)
        out[4 * L + m] = measures[m].values[v];
}

std::vector<double> extract_features(const Graph &g, const Labeling &current, NodeIndex v,
                                     const MeasureTable &measures) {
    std::vector<double> out(feature_count(current.label_count()));
    extract_features(g, current.assignment(), current.label_count(), v, measures, out);
    return out;
}

} // namespace netlabel
