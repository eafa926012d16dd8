#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "netlabel/graph.hpp"
#include "netlabel/ica.hpp"
#include "netlabel/labeling.hpp"

namespace netlabel {

/**
 * Pairwise MRF potentials for one inference problem.
 *
 * `pairwise` is L x L row-major and shared by every edge: entry (a, b)
 * weighs a sender in state a against a receiver in state b. Known nodes are
 * clamped: their influence is folded into the node potentials of their
 * unknown neighbours, so `node` holds a normalized vector for every unknown
 * node and an empty one for every known node.
 */
struct Potentials {
    std::size_t label_count = 0;
    std::vector<double> pairwise;
    std::vector<double> prior;
    std::vector<std::vector<double>> node;

    double psi(std::size_t a, std::size_t b) const { return pairwise[a * label_count + b]; }
};

/// Known-node label frequencies plus `laplace` per class, normalized.
std::vector<double> class_prior(const Labeling &seed, double laplace);

/// Node potential of every unknown node: `prior` times pairwise(label(k), .)
/// for each known neighbour k, renormalized. Entries must be positive.
Potentials absorb_evidence(const Graph &g, const Labeling &seed, std::vector<double> pairwise,
                           std::vector<double> prior);

/**
 * Empirical potentials from the seed. The pairwise table counts edges whose
 * endpoints are both known, by label pair (a cross-label edge adds to both
 * (a, b) and (b, a); a same-label edge adds once to (a, a)), adds `laplace`
 * to every cell and normalizes each row. The prior is class_prior(seed, laplace).
 */
Potentials estimate_potentials(const Graph &g, const Labeling &seed, double laplace = 1.0);

/// Messages between unknown nodes, one per ordered adjacent pair.
struct MessageState {
    std::size_t label_count = 0;
    std::vector<std::pair<NodeIndex, NodeIndex>> pairs; // (from, to), sorted
    std::vector<double> values;                         // pairs.size() x label_count

    std::span<const double> message(std::size_t i) const {
        return std::span<const double>(values).subspan(i * label_count, label_count);
    }
};

struct LbpConfig {
    int max_iter = 50;
    double rel_tol = 0.01; // max relative change of any message entry
    /// Called after initialization (round 0) and after every round.
    std::function<void(int round, const MessageState &)> on_round;
};

struct LbpResult {
    Labeling labels;                          // total
    std::vector<std::vector<double>> beliefs; // per node, empty for known nodes
    int iterations = 0;
    bool converged = false;
    int argmax_stable_rounds = 0; // trailing rounds in which no belief argmax moved
    MessageState messages;
};

/**
 * Synchronous loopy belief propagation over the unknown nodes.
 *
 * Messages start uniform. Each round recomputes every message from the
 * previous round's messages; the run stops once no message entry moves by
 * rel_tol or more (relative), or after max_iter rounds. Connected groups of
 * unknown nodes with no known neighbour carry no evidence and keep uniform
 * messages, so their beliefs equal the prior. Predictions take the belief
 * argmax, ties to the lowest label index. Deterministic.
 *
 * Throws InferenceError when the seed has no known node.
 */
LbpResult lbp_run(const Graph &g, const Labeling &seed, const Potentials &potentials, const LbpConfig &cfg = {});
LbpResult lbp_run(const Graph &g, const Labeling &seed, const LbpConfig &cfg = {}, double laplace = 1.0);

} // namespace netlabel
