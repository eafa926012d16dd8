#include "netlabel/selection.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <numeric>

namespace netlabel {

Ranking rank_nodes(const ScoreVector &scores, Direction direction) {
    const auto &vals = scores.values;
    Ranking r(vals.size());
    std::iota(r.begin(), r.end(), NodeIndex{0});
    if (direction == Direction::top) {
        std::stable_sort(r.begin(), r.end(), [&](NodeIndex a, NodeIndex b) { return vals[a] > vals[b]; });
    } else {
        std::stable_sort(r.begin(), r.end(), [&](NodeIndex a, NodeIndex b) { return vals[a] < vals[b]; });
    }
    return r;
}

SeedSet select_direct(const Ranking &ranking, std::size_t n) {
    if (n > ranking.size())
        throw SelectionError("seed size " + std::to_string(n) + " exceeds node count " +
                             std::to_string(ranking.size()));
    SeedSet s{{ranking.begin(), ranking.begin() + static_cast<std::ptrdiff_t>(n)}, n};
    std::sort(s.nodes.begin(), s.nodes.end());
    return s;
}

SeedSet select_neighbour(const Ranking &ranking, const Graph &g, std::size_t n, Rng &rng) {
    if (n > ranking.size())
        throw SelectionError("seed size " + std::to_string(n) + " exceeds node count " +
                             std::to_string(ranking.size()));
    SeedSet s{{}, n};
    for (std::size_t i = 0; i < n; ++i) {
        const auto adj = g.neighbours(ranking[i], NeighbourMode::all);
        if (adj.empty())
            continue;
        s.nodes.push_back(adj[uniform_index(rng, adj.size())]);
    }
    std::sort(s.nodes.begin(), s.nodes.end());
    s.nodes.erase(std::unique(s.nodes.begin(), s.nodes.end()), s.nodes.end());
    return s;
}

SeedSet select_random(const Graph &g, std::size_t n, Rng &rng) {
    const std::size_t total = g.node_count();
    if (n > total)
        throw SelectionError("seed size " + std::to_string(n) + " exceeds node count " + std::to_string(total));
    std::vector<NodeIndex> pool(total);
    std::iota(pool.begin(), pool.end(), NodeIndex{0});
    // partial Fisher-Yates
    for (std::size_t i = 0; i < n; ++i)
        std::swap(pool[i], pool[i + uniform_index(rng, total - i)]);
    SeedSet s{{pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n)}, n};
    std::sort(s.nodes.begin(), s.nodes.end());
    return s;
}

std::size_t seed_size_for_fraction(double fraction, std::size_t node_count) {
    if (!(fraction >= 0.0 && fraction <= 1.0))
        throw SelectionError("fraction must lie in [0, 1]");
    const int saved = std::fegetround();
    std::fesetround(FE_TONEAREST);
    const double n = std::nearbyint(fraction * static_cast<double>(node_count));
    std::fesetround(saved);
    return static_cast<std::size_t>(n);
}

SeedSet select_seeds(const Strategy &strategy, const Graph &g, const MeasureTable &measures, std::size_t n,
                     Rng &rng) {
    if (strategy.is_random())
        return select_random(g, n, rng);
    const auto &scores = measures[static_cast<std::size_t>(strategy.measure)];
    const Ranking r = rank_nodes(scores, strategy.direction);
    if (strategy.mode == SelectionMode::direct)
        return select_direct(r, n);
    return select_neighbour(r, g, n, rng);
}

} // namespace netlabel
