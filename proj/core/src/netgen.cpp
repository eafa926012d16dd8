#include "netlabel/netgen.hpp"

#include <set>
#include <string>
#include <vector>

#include "netlabel/random.hpp"

namespace netlabel {

namespace {

void require_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

std::size_t digits(std::size_t v) {
    std::size_t d = 1;
    while (v >= 10) {
        v /= 10;
        ++d;
    }
    return d;
}

// Zero-padded so lexicographic order matches numeric order.
std::string padded(char prefix, std::size_t i, std::size_t width) {
    std::string s = std::to_string(i);
    return std::string(1, prefix) + std::string(width - s.size(), '0') + s;
}

GeneratedGraph assemble(std::size_t n, std::size_t classes, const std::vector<std::pair<std::size_t, std::size_t>> &edges,
                        const std::vector<std::size_t> &label_of) {
    const std::size_t node_width = digits(n - 1);
    const std::size_t label_width = digits(classes - 1);
    GraphBuilder builder(false);
    for (std::size_t i = 0; i < n; ++i)
        builder.add_node(padded('n', i, node_width));
    for (const auto &[a, b] : edges)
        builder.add_edge(padded('n', a, node_width), padded('n', b, node_width));
    Graph g = builder.build();

    // Only classes that actually occur enter the label set.
    std::set<std::size_t> used(label_of.begin(), label_of.end());
    std::vector<Label> label_set;
    std::vector<LabelIndex> remap(classes, kUnlabelled);
    for (std::size_t c : used) {
        remap[c] = static_cast<LabelIndex>(label_set.size());
        label_set.push_back(padded('c', c, label_width));
    }
    std::vector<LabelIndex> assignment(n);
    for (std::size_t i = 0; i < n; ++i)
        assignment[g.index_of(padded('n', i, node_width))] = remap[label_of[i]];
    return {std::move(g), Labeling(std::move(label_set), std::move(assignment))};
}

} // namespace

std::string_view to_string(GenKind k) {
    switch (k) {
    case GenKind::planted_partition:
        return "planted_partition";
    case GenKind::small_world:
        return "small_world";
    case GenKind::sparse_random:
        break;
    }
    return "sparse_random";
}

std::optional<GenKind> parse_gen_kind(std::string_view s) {
    for (auto k : {GenKind::planted_partition, GenKind::small_world, GenKind::sparse_random})
        if (to_string(k) == s)
            return k;
    return std::nullopt;
}

GeneratedGraph generate(const GenSpec &spec) {
    if (spec.n == 0)
        throw std::invalid_argument("n must be at least 1");
    if (spec.blocks == 0)
        throw std::invalid_argument("at least one block/class is required");
    Rng rng(spec.seed);
    const std::size_t n = spec.n;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::size_t> label_of(n);

    switch (spec.kind) {
    case GenKind::planted_partition: {
        require_probability(spec.p_in, "p_in");
        require_probability(spec.p_out, "p_out");
        for (std::size_t i = 0; i < n; ++i)
            label_of[i] = i * spec.blocks / n;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double p = label_of[i] == label_of[j] ? spec.p_in : spec.p_out;
                if (uniform_real(rng) < p)
                    edges.emplace_back(i, j);
            }
        break;
    }
    case GenKind::small_world: {
        require_probability(spec.beta, "beta");
        const std::size_t k = spec.ring_degree;
        if (k % 2 != 0 || k >= n)
            throw std::invalid_argument("ring degree must be even and smaller than n");
        for (std::size_t i = 0; i < n; ++i)
            label_of[i] = i * spec.blocks / n;
        std::set<std::pair<std::size_t, std::size_t>> present;
        auto key = [](std::size_t a, std::size_t b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 1; j <= k / 2; ++j)
                present.insert(key(i, (i + j) % n));
        // Watts-Strogatz: visit lattice edges (i, i+j) and move the far end.
        for (std::size_t j = 1; j <= k / 2; ++j) {
            for (std::size_t i = 0; i < n; ++i) {
                if (uniform_real(rng) >= spec.beta)
                    continue;
                const auto old = key(i, (i + j) % n);
                if (!present.contains(old))
                    continue;
                // give up when i is already linked to everyone
                std::size_t degree = 0;
                for (std::size_t u = 0; u < n; ++u)
                    if (u != i && present.contains(key(i, u)))
                        ++degree;
                if (degree >= n - 1)
                    continue;
                std::size_t t;
                do {
                    t = uniform_index(rng, n);
                } while (t == i || present.contains(key(i, t)));
                present.erase(old);
                present.insert(key(i, t));
            }
        }
        edges.assign(present.begin(), present.end());
        break;
    }
    case GenKind::sparse_random: {
        require_probability(spec.p, "p");
        for (std::size_t i = 0; i < n; ++i)
            label_of[i] = uniform_index(rng, spec.blocks);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (uniform_real(rng) < spec.p)
                    edges.emplace_back(i, j);
        break;
    }
    }
    return assemble(n, spec.blocks, edges, label_of);
}

} // namespace netlabel
