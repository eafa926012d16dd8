#include "netlabel/stats.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "netlabel/measures.hpp"

namespace netlabel {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

} // namespace

std::vector<std::size_t> connected_components(const Graph &g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> comp(n, kNone);
    std::size_t next = 0;
    std::deque<NodeIndex> queue;
    for (NodeIndex s = 0; s < n; ++s) {
        if (comp[s] != kNone)
            continue;
        comp[s] = next;
        queue.push_back(s);
        while (!queue.empty()) {
            const NodeIndex v = queue.front();
            queue.pop_front();
            for (NodeIndex w : g.neighbours(v, NeighbourMode::all)) {
                if (comp[w] == kNone) {
                    comp[w] = next;
                    queue.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

double label_modularity(const Graph &g, const Labeling &labels) {
    const std::size_t n = g.node_count();
    // Group key: label index, or a private key per unlabelled node.
    auto group = [&](NodeIndex v) -> long {
        const LabelIndex l = labels.at(v);
        return l == kUnlabelled ? -1L - static_cast<long>(v) : static_cast<long>(l);
    };
    double two_m = 0.0;
    std::map<long, double> degree_sum;
    std::map<long, double> intra_ends; // each intra edge counted from both ends
    for (NodeIndex v = 0; v < n; ++v) {
        const auto nv = g.neighbours(v, NeighbourMode::all);
        const double k = static_cast<double>(nv.size());
        two_m += k;
        degree_sum[group(v)] += k;
        for (NodeIndex u : nv)
            if (group(u) == group(v))
                intra_ends[group(v)] += 1.0;
    }
    if (two_m == 0.0)
        return 0.0;
    double q = 0.0;
    for (const auto &[c, d] : degree_sum) {
        const auto it = intra_ends.find(c);
        const double ends = it == intra_ends.end() ? 0.0 : it->second;
        q += ends / two_m - (d / two_m) * (d / two_m);
    }
    return q;
}

GraphStats graph_stats(const Graph &g) {
    if (g.empty())
        throw GraphError("statistics are undefined on an empty graph");
    GraphStats s;
    const std::size_t n = g.node_count();
    const double nd = static_cast<double>(n);
    const double ed = static_cast<double>(g.edge_count());
    s.node_count = n;
    s.edge_count = g.edge_count();
    s.avg_degree = g.directed() ? ed / nd : 2.0 * ed / nd;
    if (n > 1)
        s.density = (g.directed() ? ed : 2.0 * ed) / (nd * (nd - 1.0));

    const auto comp = connected_components(g);
    s.component_count = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::size_t> sizes(s.component_count, 0);
    for (auto c : comp)
        ++sizes[c];
    // first maximum wins, i.e. the component holding the smallest node id
    const auto largest = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    std::vector<NodeIndex> members;
    for (NodeIndex v = 0; v < n; ++v)
        if (comp[v] == largest)
            members.push_back(v);

    std::vector<long> dist(n);
    std::deque<NodeIndex> queue;
    double path_sum = 0.0;
    std::size_t diameter = 0;
    for (NodeIndex src : members) {
        std::fill(dist.begin(), dist.end(), -1L);
        dist[src] = 0;
        queue.push_back(src);
        while (!queue.empty()) {
            const NodeIndex v = queue.front();
            queue.pop_front();
            path_sum += static_cast<double>(dist[v]);
            diameter = std::max(diameter, static_cast<std::size_t>(dist[v]));
            for (NodeIndex w : g.neighbours(v, NeighbourMode::all)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    const double pairs = static_cast<double>(members.size()) * static_cast<double>(members.size() - 1);
    s.diameter = diameter;
    s.avg_path_length = pairs > 0.0 ? path_sum / pairs : 0.0;

    const auto cc = local_clustering(g);
    double cc_sum = 0.0;
    for (double c : cc)
        cc_sum += c;
    s.avg_clustering = cc_sum / nd;
    return s;
}

GraphStats graph_stats(const Graph &g, const Labeling &labels) {
    if (labels.node_count() != g.node_count())
        throw LabelingError("labeling does not match the graph's node count");
    GraphStats s = graph_stats(g);
    s.label_modularity = label_modularity(g, labels);
    return s;
}

} // namespace netlabel
