#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "netlabel/graph.hpp"
#include "netlabel/measures.hpp"
#include "netlabel/random.hpp"
#include "netlabel/strategy.hpp"

namespace netlabel {

class SelectionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Nodes best-first.
using Ranking = std::vector<NodeIndex>;

/// Nodes whose labels are acquired. `nodes` is sorted; it can be smaller
/// than `nominal_size` when neighbour draws collide or ranked nodes are isolated.
struct SeedSet {
    std::vector<NodeIndex> nodes;
    std::size_t nominal_size = 0;

    std::size_t realized_size() const noexcept { return nodes.size(); }
};

/// Sorts by score (descending for top, ascending for bottom), ties by node id.
Ranking rank_nodes(const ScoreVector &scores, Direction direction);

/// First n ranked nodes. Throws SelectionError if n exceeds the ranking.
SeedSet select_direct(const Ranking &ranking, std::size_t n);

/// For each of the first n ranked nodes with at least one neighbour (in or
/// out), draws one neighbour uniformly; repeated draws collapse.
SeedSet select_neighbour(const Ranking &ranking, const Graph &g, std::size_t n, Rng &rng);

/// Uniform sample of n distinct nodes.
SeedSet select_random(const Graph &g, std::size_t n, Rng &rng);

/// round(fraction * node_count), ties to even.
std::size_t seed_size_for_fraction(double fraction, std::size_t node_count);

/// Dispatches on the strategy; `measures` is consulted for non-random modes.
SeedSet select_seeds(const Strategy &strategy, const Graph &g, const MeasureTable &measures, std::size_t n,
                     Rng &rng);

} // namespace netlabel
