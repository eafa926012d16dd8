#include "netlabel/graph.hpp"

#include <algorithm>

namespace netlabel {

namespace {

template <class Key>
void build_adjacency(std::size_t n, const std::vector<Edge> &edges, Key key,
                     std::vector<std::size_t> &offsets, std::vector<NodeIndex> &targets) {
    std::vector<std::vector<NodeIndex>> rows(n);
    for (const auto &e : edges)
        key(e, rows);
    offsets.assign(n + 1, 0);
    targets.clear();
    for (std::size_t v = 0; v < n; ++v) {
        auto &row = rows[v];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        targets.insert(targets.end(), row.begin(), row.end());
        offsets[v + 1] = targets.size();
    }
}

} // namespace

std::optional<NodeIndex> Graph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

NodeIndex Graph::index_of(std::string_view id) const {
    if (auto v = find(id))
        return *v;
    throw GraphError("node '" + std::string(id) + "' is not in the graph");
}

std::span<const NodeIndex> Graph::neighbours(NodeIndex v, NeighbourMode mode) const {
    if (v >= ids_.size())
        throw GraphError("node index " + std::to_string(v) + " out of range");
    switch (mode) {
    case NeighbourMode::in:
        return in_.row(v);
    case NeighbourMode::out:
        return out_.row(v);
    case NeighbourMode::all:
        break;
    }
    return all_.row(v);
}

std::vector<NodeId> Graph::neighbours(std::string_view id, NeighbourMode mode) const {
    std::vector<NodeId> out;
    for (NodeIndex u : neighbours(index_of(id), mode))
        out.push_back(ids_[u]);
    return out;
}

bool Graph::has_edge(NodeIndex src, NodeIndex dst) const {
    auto row = neighbours(src, NeighbourMode::out);
    return std::binary_search(row.begin(), row.end(), dst);
}

GraphBuilder &GraphBuilder::add_node(std::string id) {
    nodes_.push_back(std::move(id));
    return *this;
}

GraphBuilder &GraphBuilder::add_edge(std::string src, std::string dst) {
    if (src == dst) {
        ++self_loops_;
        nodes_.push_back(std::move(src));
        return *this;
    }
    edges_.emplace_back(std::move(src), std::move(dst));
    return *this;
}

Graph GraphBuilder::build() const {
    Graph g;
    g.directed_ = directed_;
    g.dropped_self_loops_ = self_loops_;

    std::vector<std::string> ids = nodes_;
    for (const auto &[s, d] : edges_) {
        ids.push_back(s);
        ids.push_back(d);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    g.ids_ = std::move(ids);
    g.index_.reserve(g.ids_.size());
    for (std::size_t i = 0; i < g.ids_.size(); ++i)
        g.index_.emplace(g.ids_[i], static_cast<NodeIndex>(i));

    g.edges_.reserve(edges_.size());
    for (const auto &[s, d] : edges_) {
        Edge e{g.index_.at(s), g.index_.at(d)};
        if (!directed_ && e.src > e.dst)
            std::swap(e.src, e.dst);
        g.edges_.push_back(e);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    const std::size_t n = g.ids_.size();
    auto both = [](const Edge &e, std::vector<std::vector<NodeIndex>> &rows) {
        rows[e.src].push_back(e.dst);
        rows[e.dst].push_back(e.src);
    };
    build_adjacency(n, g.edges_, both, g.all_.offsets, g.all_.targets);
    if (directed_) {
        build_adjacency(
            n, g.edges_,
            [](const Edge &e, std::vector<std::vector<NodeIndex>> &rows) { rows[e.src].push_back(e.dst); },
            g.out_.offsets, g.out_.targets);
        build_adjacency(
            n, g.edges_,
            [](const Edge &e, std::vector<std::vector<NodeIndex>> &rows) { rows[e.dst].push_back(e.src); },
            g.in_.offsets, g.in_.targets);
    } else {
        g.out_ = g.all_;
        g.in_ = g.all_;
    }
    return g;
}

} // namespace netlabel
