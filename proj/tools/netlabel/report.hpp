#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "results_csv.hpp"
#include "sweep.hpp"

namespace netlabel::app {

/// Mean of every (dataset, algorithm, strategy, fraction) group of run rows.
struct CellAverage {
    std::string dataset;
    Algorithm algorithm = Algorithm::ica;
    Strategy strategy;
    double fraction = 0.0;
    std::size_t runs = 0;
    double error = 0.0;
    double nominal_seed = 0.0;
    double realized_seed = 0.0;
    double uncovered_fraction = 0.0;
    double kl_divergence = 0.0;
};

/// Groups in canonical order. Rows with run="avg" are ignored.
std::vector<CellAverage> average_cells(const std::vector<ResultRecord> &records);

/// Error by fraction and strategy for one (dataset, algorithm).
struct ErrorTable {
    std::string dataset;
    Algorithm algorithm = Algorithm::ica;
    std::vector<double> fractions;
    std::vector<Strategy> strategies; // the 28 non-random ones, canonical order
    std::vector<std::vector<double>> error; // [fraction][strategy], NaN when missing
    std::vector<double> random; // NaN when missing
    std::vector<std::optional<std::size_t>> better_direct;
    std::vector<std::optional<std::size_t>> better_neighbour;
};

std::vector<ErrorTable> build_tables(const std::vector<CellAverage> &cells);

struct RegressionRow {
    Algorithm algorithm;
    SelectionMode mode;
    std::string predictor; // "clustering" or "path_length"
    std::size_t points;
    RegressionFit robust;
    RegressionFit ols;
};

/**
 * Writes into `out_dir`:
 *   results_aggregated.csv            input rows plus run="avg" rows for multi-run groups
 *   {dataset}_{algorithm}_table.csv   fraction x strategy errors, random mean, # better per mode
 *   {dataset}_{algorithm}_{figure}.svg  figure in {error, kl, uncovered, shrinkage}
 *   all_{algorithm}_regression.csv and all_{algorithm}_regression_{predictor}.svg
 *                                     when `datasets` covers at least 3 datasets
 * Returns the written paths.
 */
std::vector<std::filesystem::path> write_report(const std::vector<ResultRecord> &records,
                                                const std::vector<DatasetSummary> &datasets,
                                                const std::filesystem::path &out_dir);

std::vector<RegressionRow> regress_better_counts(const std::vector<ErrorTable> &tables,
                                                 const std::vector<DatasetSummary> &datasets);

} // namespace netlabel::app
