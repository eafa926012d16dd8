#pragma once

#include <stdexcept>

#include "netlabel/graph.hpp"
#include "netlabel/labeling.hpp"
#include "netlabel/local_classifier.hpp"
#include "netlabel/measures.hpp"
#include "netlabel/random.hpp"

namespace netlabel {

class InferenceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct IcaConfig {
    int max_iter = 50;
    ClassifierConfig classifier;
};

struct IcaResult {
    Labeling labels;     // total: every node labelled
    int iterations = 0;  // relabelling passes after the bootstrap pass
    bool converged = false;
};

/**
 * Iterative classification.
 *
 * The local classifier is trained once, on the known nodes' features
 * computed from the seed labels alone. A bootstrap pass labels every
 * unknown node from those seed-only features; afterwards each pass visits
 * the unknown nodes in a fresh random order and relabels them one at a
 * time from the current assignment. Stops after a pass that changes
 * nothing or after max_iter passes. Seed labels never change.
 *
 * Throws InferenceError when the seed has no known node.
 */
IcaResult ica_run(const Graph &g, const Labeling &seed, const MeasureTable &measures, const IcaConfig &cfg, Rng &rng);
IcaResult ica_run(const Graph &g, const Labeling &seed, const IcaConfig &cfg, Rng &rng);

} // namespace netlabel
