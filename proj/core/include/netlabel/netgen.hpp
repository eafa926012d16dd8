#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>

#include "netlabel/graph.hpp"
#include "netlabel/labeling.hpp"

namespace netlabel {

enum class GenKind { planted_partition, small_world, sparse_random };

std::string_view to_string(GenKind k);
std::optional<GenKind> parse_gen_kind(std::string_view s);

/**
 * Parameters for a labelled synthetic graph. Fields not used by `kind` are
 * ignored. Every generated graph is undirected.
 *
 *   planted_partition: `blocks` contiguous equal-size blocks; node pairs join
 *                      with p_in inside a block and p_out across blocks.
 *   small_world:       ring lattice with `ring_degree` (even) neighbours per
 *                      node, each lattice edge rewired with probability `beta`;
 *                      labels are `blocks` contiguous arcs of the ring.
 *   sparse_random:     G(n, p) with labels drawn uniformly from `blocks` classes.
 */
struct GenSpec {
    GenKind kind = GenKind::planted_partition;
    std::size_t n = 0;
    std::size_t blocks = 2;
    double p_in = 0.0;
    double p_out = 0.0;
    std::size_t ring_degree = 4;
    double beta = 0.0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

struct GeneratedGraph {
    Graph graph;
    Labeling truth;
};

/// Throws std::invalid_argument on probabilities outside [0,1], n == 0,
/// blocks == 0 or an unusable ring degree. Deterministic in `spec`.
GeneratedGraph generate(const GenSpec &spec);

} // namespace netlabel
