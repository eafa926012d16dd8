#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "netlabel/graph.hpp"
#include "netlabel/labeling.hpp"
#include "netlabel/measures.hpp"

namespace netlabel {

/**
 * Relational plus structural attributes of one node.
 *
 * Layout, with L = label count:
 *   [0, L)        in-neighbours currently labelled l (count)
 *   [L, 2L)       same, as a fraction of labelled in-neighbours
 *   [2L, 3L)      out-neighbours currently labelled l (count)
 *   [3L, 4L)      same, as a fraction of labelled out-neighbours
 *   [4L, 4L + 7)  the seven structural scores in kAllMeasures order
 *
 * Unlabelled neighbours are left out of the fraction denominators; a zero
 * denominator gives zero fractions. Undirected graphs fill the in and out
 * blocks identically.
 */
std::size_t feature_count(std::size_t label_count);

void extract_features(const Graph &g, std::span<const LabelIndex> current, std::size_t label_count, NodeIndex v,
                      const MeasureTable &measures, std::span<double> out);

std::vector<double> extract_features(const Graph &g, const Labeling &current, NodeIndex v,
                                     const MeasureTable &measures);

} // namespace netlabel
