#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "netlabel/stats.hpp"
#include "pipeline.hpp"

namespace netlabel::app {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    std::vector<DatasetSource> datasets;
    std::vector<Algorithm> algorithms = {Algorithm::ica, Algorithm::lbp};
    std::vector<Strategy> strategies = enumerate_strategies();
    std::vector<double> fractions = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::size_t random_repeats = 14;
    std::uint64_t master_seed = 42;
    RunOptions run;
    std::filesystem::path output_dir = "sweep_out";
    std::filesystem::path debug_beliefs_dir; // empty: no belief dumps
};

/// Relative paths in the document resolve against `base_dir`.
/// Throws ConfigError on unknown keys or invalid values.
SweepConfig parse_sweep_config(const nlohmann::json &doc, const std::filesystem::path &base_dir);
SweepConfig load_sweep_config(const std::filesystem::path &path);

struct DatasetSummary {
    std::string name;
    bool directed = false;
    std::size_t label_count = 0;
    GraphStats stats;
};

struct SweepOutput {
    std::vector<SweepResult> rows; // canonical order
    std::vector<DatasetSummary> datasets;
    std::vector<std::string> failures;
};

/// Rows per dataset: algorithms x fractions x (non-random strategies + random_repeats).
std::size_t expected_rows_per_dataset(const SweepConfig &cfg);

/**
 * Runs every cell on a pool of `jobs` workers. Each cell draws from its
 * own seed (derive_cell_seed), and rows are stored by cell position, so
 * the output does not depend on `jobs` or on scheduling.
 */
SweepOutput run_sweep(const SweepConfig &cfg, std::size_t jobs, std::ostream *progress = nullptr);

/// "node_id,label,belief" rows for one LBP cell.
void write_beliefs(const std::filesystem::path &path, const Dataset &ds, const CellOutcome &out);
std::string belief_file_name(const SweepResult &r);

void write_results_csv(const std::vector<SweepResult> &rows, std::ostream &out);
void write_dataset_summary_csv(const std::vector<DatasetSummary> &datasets, std::ostream &out);
std::vector<DatasetSummary> read_dataset_summary_csv(std::istream &in);

} // namespace netlabel::app
