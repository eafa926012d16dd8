#include "netlabel/measures.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace netlabel {

namespace {

constexpr std::array<std::string_view, 7> kMeasureNames = {
    "indegree", "outdegree", "betweenness", "clustering", "hubness", "authority", "pagerank",
};

void require_non_empty(const Graph &g) {
    if (g.empty())
        throw GraphError("measures are undefined on an empty graph");
}

double l2_norm(const std::vector<double> &x) {
    double s = 0.0;
    for (double v : x)
        s += v * v;
    return std::sqrt(s);
}

// Returns false when the vector is identically zero.
bool normalize_l2(std::vector<double> &x) {
    const double norm = l2_norm(x);
    if (norm == 0.0)
        return false;
    for (double &v : x)
        v /= norm;
    return true;
}

double l2_distance(const std::vector<double> &a, const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace

std::string_view to_string(Measure m) {
    return kMeasureNames[static_cast<std::size_t>(m)];
}

std::optional<Measure> parse_measure(std::string_view name) {
    for (std::size_t i = 0; i < kMeasureNames.size(); ++i)
        if (kMeasureNames[i] == name)
            return kAllMeasures[i];
    return std::nullopt;
}

std::vector<double> betweenness(const Graph &g) {
    const std::size_t n = g.node_count();
    const auto mode = g.directed() ? NeighbourMode::out : NeighbourMode::all;
    std::vector<double> cb(n, 0.0);

    std::vector<NodeIndex> order;
    std::vector<std::vector<NodeIndex>> preds(n);
    std::vector<double> sigma(n);
    std::vector<long> dist(n);
    std::vector<double> delta(n);
    std::deque<NodeIndex> queue;

    for (NodeIndex s = 0; s < n; ++s) {
        order.clear();
        for (auto &p : preds)
            p.clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1L);
        sigma[s] = 1.0;
        dist[s] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const NodeIndex v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (NodeIndex w : g.neighbours(v, mode)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const NodeIndex w = *it;
            for (NodeIndex v : preds[w])
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s)
                cb[w] += delta[w];
        }
    }
    if (!g.directed())
        for (double &v : cb)
            v /= 2.0;
    return cb;
}

std::vector<double> local_clustering(const Graph &g) {
    const std::size_t n = g.node_count();
    std::vector<double> cc(n, 0.0);
    for (NodeIndex v = 0; v < n; ++v) {
        const auto nv = g.neighbours(v, NeighbourMode::all);
        const std::size_t k = nv.size();
        if (k < 2)
            continue;
        std::size_t links = 0;
        for (NodeIndex u : nv) {
            const auto nu = g.neighbours(u, NeighbourMode::all);
            // sorted-set intersection size
            auto a = nv.begin();
            auto b = nu.begin();
            while (a != nv.end() && b != nu.end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++links;
                    ++a;
                    ++b;
                }
            }
        }
        // every triangle edge among neighbours was seen from both ends
        cc[v] = static_cast<double>(links) / static_cast<double>(k * (k - 1));
    }
    return cc;
}

std::vector<double> pagerank(const Graph &g, const MeasureOptions &opts) {
    require_non_empty(g);
    const std::size_t n = g.node_count();
    const double inv_n = 1.0 / static_cast<double>(n);
    const double d = opts.damping;

    std::vector<double> out_deg(n);
    for (NodeIndex v = 0; v < n; ++v)
        out_deg[v] = static_cast<double>(g.degree(v, NeighbourMode::out));

    std::vector<double> x(n, inv_n);
    std::vector<double> next(n);
    for (int iter = 0; iter < opts.pagerank_max_iter; ++iter) {
        double dangling = 0.0;
        for (NodeIndex v = 0; v < n; ++v)
            if (out_deg[v] == 0.0)
                dangling += x[v];
        const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
        double change = 0.0;
        for (NodeIndex v = 0; v < n; ++v) {
            double in_mass = 0.0;
            for (NodeIndex u : g.neighbours(v, NeighbourMode::in))
                in_mass += x[u] / out_deg[u];
            next[v] = base + d * in_mass;
            change += std::abs(next[v] - x[v]);
        }
        x.swap(next);
        if (change < opts.pagerank_tol)
            break;
    }
    double total = 0.0;
    for (double v : x)
        total += v;
    for (double &v : x)
        v /= total;
    return x;
}

HitsScores hits(const Graph &g, const MeasureOptions &opts) {
    require_non_empty(g);
    const std::size_t n = g.node_count();
    const double uniform = 1.0 / std::sqrt(static_cast<double>(n));
    HitsScores s{std::vector<double>(n, uniform), std::vector<double>(n, uniform)};
    if (g.edge_count() == 0)
        return s;

    std::vector<double> auth(n);
    std::vector<double> hub(n);
    for (int iter = 0; iter < opts.hits_max_iter; ++iter) {
        for (NodeIndex v = 0; v < n; ++v) {
            double a = 0.0;
            for (NodeIndex u : g.neighbours(v, NeighbourMode::in))
                a += s.hub[u];
            auth[v] = a;
        }
        normalize_l2(auth);
        for (NodeIndex v = 0; v < n; ++v) {
            double h = 0.0;
            for (NodeIndex u : g.neighbours(v, NeighbourMode::out))
                h += auth[u];
            hub[v] = h;
        }
        normalize_l2(hub);
        const double change = std::max(l2_distance(auth, s.authority), l2_distance(hub, s.hub));
        s.authority.swap(auth);
        s.hub.swap(hub);
        if (change < opts.hits_tol)
            break;
    }
    return s;
}

ScoreVector compute_measure(const Graph &g, Measure m, const MeasureOptions &opts) {
    require_non_empty(g);
    const std::size_t n = g.node_count();
    ScoreVector out{m, {}};
    switch (m) {
    case Measure::indegree:
    case Measure::outdegree: {
        const auto mode = m == Measure::indegree ? NeighbourMode::in : NeighbourMode::out;
        out.values.resize(n);
        for (NodeIndex v = 0; v < n; ++v)
            out.values[v] = static_cast<double>(g.degree(v, mode));
        break;
    }
    case Measure::betweenness:
        out.values = betweenness(g);
        break;
    case Measure::clustering:
        out.values = local_clustering(g);
        break;
    case Measure::hubness:
        out.values = hits(g, opts).hub;
        break;
    case Measure::authority:
        out.values = hits(g, opts).authority;
        break;
    case Measure::pagerank:
        out.values = pagerank(g, opts);
        break;
    }
    return out;
}

MeasureTable compute_all_measures(const Graph &g, const MeasureOptions &opts) {
    require_non_empty(g);
    const auto h = hits(g, opts);
    MeasureTable t{
        compute_measure(g, Measure::indegree, opts),
        compute_measure(g, Measure::outdegree, opts),
        ScoreVector{Measure::betweenness, betweenness(g)},
        ScoreVector{Measure::clustering, local_clustering(g)},
        ScoreVector{Measure::hubness, h.hub},
        ScoreVector{Measure::authority, h.authority},
        ScoreVector{Measure::pagerank, pagerank(g, opts)},
    };
    return t;
}

} // namespace netlabel
