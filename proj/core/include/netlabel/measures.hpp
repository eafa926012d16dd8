#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "netlabel/graph.hpp"

namespace netlabel {

enum class Measure { indegree, outdegree, betweenness, clustering, hubness, authority, pagerank };

inline constexpr std::array<Measure, 7> kAllMeasures = {
    Measure::indegree, Measure::outdegree, Measure::betweenness, Measure::clustering,
    Measure::hubness,  Measure::authority, Measure::pagerank,
};

std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view name);

/// One value per node, indexed by NodeIndex.
struct ScoreVector {
    Measure measure;
    std::vector<double> values;
};

struct MeasureOptions {
    double damping = 0.85;
    double pagerank_tol = 1e-9; // L1 change between sweeps
    int pagerank_max_iter = 200;
    double hits_tol = 1e-8; // L2 change between sweeps
    int hits_max_iter = 100;
};

/// Scores for all seven measures, in kAllMeasures order.
using MeasureTable = std::array<ScoreVector, kAllMeasures.size()>;

/// Throws GraphError for an empty graph.
ScoreVector compute_measure(const Graph &g, Measure m, const MeasureOptions &opts = {});
MeasureTable compute_all_measures(const Graph &g, const MeasureOptions &opts = {});

// Individual measures.

/// Brandes accumulation, unnormalized. Undirected graphs count each
/// unordered pair once; directed graphs follow edge direction.
std::vector<double> betweenness(const Graph &g);

/// Local clustering coefficient on the undirected view; degree < 2 scores 0.
std::vector<double> local_clustering(const Graph &g);

/// Uniform teleport, dangling mass spread uniformly. Sums to 1.
std::vector<double> pagerank(const Graph &g, const MeasureOptions &opts = {});

struct HitsScores {
    std::vector<double> hub;
    std::vector<double> authority;
};

/// Power iteration with L2 normalization of both vectors every sweep.
HitsScores hits(const Graph &g, const MeasureOptions &opts = {});

} // namespace netlabel
