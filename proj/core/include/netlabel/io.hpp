#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "netlabel/graph.hpp"
#include "netlabel/labeling.hpp"

namespace netlabel {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Edge list: one "src<ws>dst" pair per line, '#' starts a comment line.
// The optional node list holds one id per line and adds isolated nodes.
Graph load_edge_list(std::istream &edges, bool directed, std::istream *node_list = nullptr);
Graph load_edge_list(const std::filesystem::path &edges, bool directed,
                     const std::filesystem::path &node_list = {});

void write_edge_list(const Graph &g, std::ostream &out);
void write_node_list(const Graph &g, std::ostream &out);

// Labels: "node_id,label" per line, no header. Every id must exist in `g`.
Labeling load_labels(std::istream &in, const Graph &g);
Labeling load_labels(const std::filesystem::path &path, const Graph &g);

/// Writes the known nodes only, in node order.
void write_labels(const Graph &g, const Labeling &labels, std::ostream &out);

} // namespace netlabel
