#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace netlabel {

/// Node identifiers are opaque strings ordered lexicographically.
using NodeId = std::string;

/// Dense position of a node in a Graph. Index order equals id order.
using NodeIndex = std::uint32_t;

enum class NeighbourMode { in, out, all };

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    NodeIndex src;
    NodeIndex dst;

    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Immutable simple graph over string-identified nodes.
 *
 * Nodes are stored in lexicographic id order, so every tie broken by
 * NodeIndex is also broken by id. Undirected edges are stored once with
 * src < dst. Adjacency lists are sorted and free of duplicates; for
 * undirected graphs the in, out and all lists coincide.
 */
class Graph {
public:
    Graph() = default;

    bool directed() const noexcept { return directed_; }
    std::size_t node_count() const noexcept { return ids_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return ids_.empty(); }

    std::span<const NodeId> ids() const noexcept { return ids_; }
    const NodeId &id(NodeIndex v) const { return ids_.at(v); }

    std::optional<NodeIndex> find(std::string_view id) const;
    /// Throws GraphError when the id is not a member of the graph.
    NodeIndex index_of(std::string_view id) const;

    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const NodeIndex> neighbours(NodeIndex v, NeighbourMode mode) const;
    std::vector<NodeId> neighbours(std::string_view id, NeighbourMode mode) const;

    std::size_t degree(NodeIndex v, NeighbourMode mode) const {
        return neighbours(v, mode).size();
    }

    bool has_edge(NodeIndex src, NodeIndex dst) const;

    /// Self-loops discarded while building.
    std::size_t dropped_self_loops() const noexcept { return dropped_self_loops_; }

    friend bool operator==(const Graph &a, const Graph &b) {
        return a.directed_ == b.directed_ && a.ids_ == b.ids_ && a.edges_ == b.edges_;
    }

private:
    friend class GraphBuilder;

    struct Adjacency {
        std::vector<std::size_t> offsets;
        std::vector<NodeIndex> targets;

        std::span<const NodeIndex> row(NodeIndex v) const {
            return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
        }
    };

    bool directed_ = false;
    std::vector<NodeId> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<Edge> edges_;
    Adjacency out_;
    Adjacency in_;
    Adjacency all_;
    std::size_t dropped_self_loops_ = 0;
};

/// Accumulates nodes and edges; duplicate edges collapse and self-loops are dropped.
class GraphBuilder {
public:
    explicit GraphBuilder(bool directed) : directed_(directed) {}

    GraphBuilder &add_node(std::string id);
    GraphBuilder &add_edge(std::string src, std::string dst);

    Graph build() const;

private:
    bool directed_;
    std::vector<std::string> nodes_;
    std::vector<std::pair<std::string, std::string>> edges_;
    std::size_t self_loops_ = 0;
};

} // namespace netlabel
