#include "netlabel/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace netlabel {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

bool skippable(std::string_view line) {
    return line.empty() || line.front() == '#';
}

std::ifstream open_or_throw(const std::filesystem::path &p) {
    std::ifstream in(p);
    if (!in)
        throw std::runtime_error("cannot open '" + p.string() + "'");
    return in;
}

} // namespace

Graph load_edge_list(std::istream &edges, bool directed, std::istream *node_list) {
    GraphBuilder builder(directed);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(edges, line)) {
        ++lineno;
        const auto body = trim(line);
        if (skippable(body))
            continue;
        std::istringstream tokens{std::string(body)};
        std::vector<std::string> parts;
        for (std::string t; tokens >> t;)
            parts.push_back(std::move(t));
        if (parts.size() != 2)
            throw ParseError(lineno, "expected 2 node tokens, found " + std::to_string(parts.size()));
        builder.add_edge(std::move(parts[0]), std::move(parts[1]));
    }
    if (node_list) {
        lineno = 0;
        while (std::getline(*node_list, line)) {
            ++lineno;
            const auto body = trim(line);
            if (skippable(body))
                continue;
            if (body.find_first_of(" \t") != std::string_view::npos)
                throw ParseError(lineno, "node list entries must be a single token");
            builder.add_node(std::string(body));
        }
    }
    return builder.build();
}

Graph load_edge_list(const std::filesystem::path &edges, bool directed, const std::filesystem::path &node_list) {
    auto in = open_or_throw(edges);
    if (node_list.empty())
        return load_edge_list(in, directed);
    auto nodes = open_or_throw(node_list);
    return load_edge_list(in, directed, &nodes);
}

void write_edge_list(const Graph &g, std::ostream &out) {
    for (const auto &e : g.edges())
        out << g.id(e.src) << ' ' << g.id(e.dst) << '\n';
}

void write_node_list(const Graph &g, std::ostream &out) {
    for (const auto &id : g.ids())
        out << id << '\n';
}

Labeling load_labels(std::istream &in, const Graph &g) {
    std::map<NodeIndex, std::string> raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto body = trim(line);
        if (skippable(body))
            continue;
        const auto comma = body.find(',');
        if (comma == std::string_view::npos)
            throw ParseError(lineno, "expected 'node_id,label'");
        const auto id = trim(body.substr(0, comma));
        const auto label = trim(body.substr(comma + 1));
        if (id.empty() || label.empty())
            throw ParseError(lineno, "empty node id or label");
        const auto v = g.find(id);
        if (!v)
            throw LabelingError("line " + std::to_string(lineno) + ": unknown node id '" + std::string(id) + "'");
        auto [it, inserted] = raw.emplace(*v, std::string(label));
        if (!inserted && it->second != label)
            throw LabelingError("line " + std::to_string(lineno) + ": conflicting labels for node '" +
                                std::string(id) + "' ('" + it->second + "' vs '" + std::string(label) + "')");
    }

    std::vector<Label> label_set;
    for (const auto &[v, l] : raw)
        label_set.push_back(l);
    std::sort(label_set.begin(), label_set.end());
    label_set.erase(std::unique(label_set.begin(), label_set.end()), label_set.end());

    std::vector<LabelIndex> assignment(g.node_count(), kUnlabelled);
    for (const auto &[v, l] : raw)
        assignment[v] = static_cast<LabelIndex>(std::lower_bound(label_set.begin(), label_set.end(), l) -
                                                label_set.begin());
    return Labeling(std::move(label_set), std::move(assignment));
}

Labeling load_labels(const std::filesystem::path &path, const Graph &g) {
    auto in = open_or_throw(path);
    return load_labels(in, g);
}

void write_labels(const Graph &g, const Labeling &labels, std::ostream &out) {
    for (NodeIndex v : labels.known())
        out << g.id(v) << ',' << labels.label_name(labels.at(v)) << '\n';
}

} // namespace netlabel
