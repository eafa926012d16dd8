#include "netlabel/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace netlabel {

std::string_view to_string(Algorithm a) {
    return a == Algorithm::ica ? "ica" : "lbp";
}

std::optional<Algorithm> parse_algorithm(std::string_view s) {
    if (s == "ica")
        return Algorithm::ica;
    if (s == "lbp")
        return Algorithm::lbp;
    return std::nullopt;
}

double classification_error(const Labeling &pred, const Labeling &truth, std::span<const NodeIndex> eval_set) {
    if (eval_set.empty())
        return 0.0;
    std::size_t wrong = 0;
    for (NodeIndex v : eval_set) {
        if (v >= pred.node_count() || !pred.is_known(v))
            throw EvalError("missing prediction for node index " + std::to_string(v));
        if (v >= truth.node_count() || !truth.is_known(v))
            throw EvalError("missing ground truth for node index " + std::to_string(v));
        if (pred.label_name(pred.at(v)) != truth.label_name(truth.at(v)))
            ++wrong;
    }
    return static_cast<double>(wrong) / static_cast<double>(eval_set.size());
}

double kl_divergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw EvalError("distributions differ in length");
    double kl = 0.0;
    for (std::size_t c = 0; c < p.size(); ++c) {
        if (p[c] == 0.0)
            continue;
        if (q[c] == 0.0)
            return std::numeric_limits<double>::infinity();
        kl += p[c] * std::log(p[c] / q[c]);
    }
    // Gibbs' inequality; clamp rounding noise
    return std::max(kl, 0.0);
}

double kl_divergence(std::span<const LabelIndex> sample, std::span<const LabelIndex> full, std::size_t label_count,
                     double smoothing) {
    if (full.empty())
        throw EvalError("KL divergence needs a non-empty full label multiset");
    if (smoothing < 0.0)
        throw EvalError("smoothing must be non-negative");
    auto distribution = [&](std::span<const LabelIndex> labels) {
        std::vector<double> d(label_count, smoothing);
        for (LabelIndex l : labels) {
            if (l < 0 || static_cast<std::size_t>(l) >= label_count)
                throw EvalError("label outside the label set");
            d[static_cast<std::size_t>(l)] += 1.0;
        }
        double z = 0.0;
        for (double v : d)
            z += v;
        if (z == 0.0)
            return d; // empty sample without smoothing: all zero
        for (double &v : d)
            v /= z;
        return d;
    };
    const auto p = distribution(full);
    const auto q = distribution(sample);
    return kl_divergence(p, q);
}

double class_coverage(const SeedSet &seed, const Labeling &truth) {
    if (truth.label_count() == 0)
        return 0.0;
    std::vector<char> seen(truth.label_count(), 0);
    for (NodeIndex v : seed.nodes) {
        const LabelIndex l = truth.at(v);
        if (l != kUnlabelled)
            seen[static_cast<std::size_t>(l)] = 1;
    }
    const auto covered = std::count(seen.begin(), seen.end(), 1);
    return static_cast<double>(covered) / static_cast<double>(truth.label_count());
}

double uncovered_fraction(const SeedSet &seed, const Labeling &truth) {
    if (truth.label_count() == 0)
        return 0.0;
    return 1.0 - class_coverage(seed, truth);
}

std::size_t better_than_random_count(std::span<const double> non_random_errors, double random_error) {
    if (non_random_errors.size() != kNonRandomPerMode)
        throw EvalError("expected " + std::to_string(kNonRandomPerMode) + " non-random results, got " +
                        std::to_string(non_random_errors.size()));
    return static_cast<std::size_t>(std::count_if(non_random_errors.begin(), non_random_errors.end(),
                                                  [&](double e) { return e < random_error; }));
}

} // namespace netlabel
