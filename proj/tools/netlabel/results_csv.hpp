#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netlabel/eval.hpp"

namespace netlabel::app {

inline constexpr std::string_view kResultHeader =
    "dataset,algorithm,mode,measure,direction,fraction,run,error,nominal_seed,realized_seed,"
    "uncovered_fraction,kl_divergence";

class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parsed result row. Aggregated rows carry run="avg" and may hold
/// fractional seed sizes, so sizes are kept as doubles here.
struct ResultRecord {
    SweepResult result;
    bool average = false;
    double nominal_seed = 0.0;
    double realized_seed = 0.0;
};

std::string format_result_row(const SweepResult &r);
std::string format_average_row(const ResultRecord &avg);

/// Throws SchemaError naming the first missing column, or on malformed rows.
std::vector<ResultRecord> read_results(std::istream &in);

} // namespace netlabel::app
