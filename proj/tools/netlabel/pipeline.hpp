#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "netlabel/eval.hpp"
#include "netlabel/graph.hpp"
#include "netlabel/ica.hpp"
#include "netlabel/labeling.hpp"
#include "netlabel/lbp.hpp"
#include "netlabel/measures.hpp"
#include "netlabel/netgen.hpp"
#include "netlabel/strategy.hpp"

namespace netlabel::app {

/// A loaded graph with its ground truth and precomputed scores.
struct Dataset {
    std::string name;
    Graph graph;
    Labeling truth;
    MeasureTable measures;
};

struct DatasetSource {
    std::string name;
    std::filesystem::path edges;
    std::filesystem::path labels;
    std::filesystem::path nodes; // optional isolated-node list
    bool directed = false;
    std::optional<GenSpec> generated; // used instead of files when set
};

Dataset load_dataset(const DatasetSource &src);
Dataset make_dataset(std::string name, Graph g, Labeling truth);

struct RunOptions {
    IcaConfig ica;
    LbpConfig lbp;
    double laplace = 1.0;
    double kl_smoothing = 1.0;
};

struct CellSpec {
    Algorithm algorithm = Algorithm::ica;
    Strategy strategy;
    double fraction = 0.1;
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
};

struct CellOutcome {
    SweepResult result;
    Labeling prediction;
    /// (node, label, belief) rows; filled for LBP only.
    std::vector<std::vector<double>> beliefs;
};

/// Stable per-cell seed from the master seed and the cell coordinates.
std::uint64_t derive_cell_seed(std::uint64_t master_seed, const std::string &dataset, Algorithm algorithm,
                               const Strategy &strategy, double fraction, std::size_t run_index);

/// score -> rank -> select -> acquire -> classify -> evaluate for one cell.
CellOutcome run_cell(const Dataset &ds, const CellSpec &cell, const RunOptions &opts);

/// Shortest round-trip decimal form.
std::string format_double(double v);

} // namespace netlabel::app
