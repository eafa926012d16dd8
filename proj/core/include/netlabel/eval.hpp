#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "netlabel/labeling.hpp"
#include "netlabel/selection.hpp"
#include "netlabel/strategy.hpp"

namespace netlabel {

class EvalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Algorithm { ica, lbp };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view s);

/// One experiment cell.
struct SweepResult {
    std::string dataset;
    Algorithm algorithm = Algorithm::ica;
    Strategy strategy;
    double fraction = 0.0;
    std::size_t run_index = 0;
    double error = 0.0;
    std::size_t nominal_seed_size = 0;
    std::size_t realized_seed_size = 0;
    double uncovered_fraction = 0.0;
    double kl_divergence = 0.0;
};

/// Share of `eval_set` where pred and truth disagree; 0 for an empty set.
/// Throws EvalError if pred or truth lacks a label for an evaluated node.
double classification_error(const Labeling &pred, const Labeling &truth, std::span<const NodeIndex> eval_set);

/**
 * KL(P_full || Q_sample) in nats over `label_count` classes. Both label
 * multisets get `smoothing` pseudo-counts per class before normalizing.
 * Returns +inf when some class has Q = 0 < P (only possible without
 * smoothing). Throws EvalError for an empty full multiset.
 */
double kl_divergence(std::span<const LabelIndex> sample, std::span<const LabelIndex> full, std::size_t label_count,
                     double smoothing = 1.0);

/// KL(p || q) for two probability vectors; terms with p = 0 vanish.
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// Distinct labels among the seed nodes over the size of the label set.
double class_coverage(const SeedSet &seed, const Labeling &truth);

/// Share of the label set that no seed node carries: 1 - class_coverage.
double uncovered_fraction(const SeedSet &seed, const Labeling &truth);

inline constexpr std::size_t kNonRandomPerMode = 14;

/// How many of the 14 non-random errors are strictly below the random one.
/// Throws EvalError unless exactly 14 errors are given.
std::size_t better_than_random_count(std::span<const double> non_random_errors, double random_error);

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    bool robust = false;
    int iterations = 0;
};

struct HuberOptions {
    double tuning = 1.345;
    int max_iter = 50;
    double tol = 1e-8;
};

/// Straight-line fit. Robust fits use Huber IRLS with a MAD scale estimate;
/// otherwise ordinary least squares. r_squared is measured on the unweighted
/// data and clamped to [0, 1]. Needs at least 3 points and non-constant x.
RegressionFit robust_regression(std::span<const double> x, std::span<const double> y, bool robust = true,
                                const HuberOptions &opts = {});

} // namespace netlabel
