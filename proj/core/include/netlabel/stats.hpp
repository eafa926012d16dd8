#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "netlabel/graph.hpp"
#include "netlabel/labeling.hpp"

namespace netlabel {

struct GraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double avg_degree = 0.0; // 2E/n undirected, E/n directed
    double density = 0.0;
    std::size_t component_count = 0;
    std::size_t diameter = 0;     // largest component, undirected view
    double avg_path_length = 0.0; // largest component, undirected view
    std::optional<double> label_modularity;
    double avg_clustering = 0.0;
};

/// Weakly connected component id per node; ids are numbered by smallest member.
std::vector<std::size_t> connected_components(const Graph &g);

/// Newman modularity of the partition induced by `labels` on the undirected
/// view. Unlabelled nodes form singleton groups.
double label_modularity(const Graph &g, const Labeling &labels);

/// Throws GraphError for an empty graph.
GraphStats graph_stats(const Graph &g);
GraphStats graph_stats(const Graph &g, const Labeling &labels);

} // namespace netlabel
