#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "netlabel/local_classifier.hpp"

namespace netlabel {

NaiveBayes NaiveBayes::train(const TrainingSet &data, std::size_t label_count, double variance_floor) {
    if (data.rows() == 0)
        throw ClassifierError("cannot train on an empty training set");
    const std::size_t d = data.feature_count;
    NaiveBayes nb;
    nb.label_count_ = label_count;
    nb.feature_count_ = d;
    nb.mean_.assign(label_count * d, 0.0);
    nb.variance_.assign(label_count * d, 0.0);

    std::vector<double> counts(label_count, 0.0);
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const auto c = static_cast<std::size_t>(data.labels[i]);
        counts[c] += 1.0;
        const auto x = data.row(i);
        for (std::size_t f = 0; f < d; ++f)
            nb.mean_[c * d + f] += x[f];
    }
    for (std::size_t c = 0; c < label_count; ++c)
        if (counts[c] > 0.0)
            for (std::size_t f = 0; f < d; ++f)
                nb.mean_[c * d + f] /= counts[c];
    for (std::size_t i = 0; i < data.rows(); ++i) {
        const auto c = static_cast<std::size_t>(data.labels[i]);
        const auto x = data.row(i);
        for (std::size_t f = 0; f < d; ++f) {
            const double diff = x[f] - nb.mean_[c * d + f];
            nb.variance_[c * d + f] += diff * diff;
        }
    }
    const double total = static_cast<double>(data.rows());
    nb.log_prior_.assign(label_count, -std::numeric_limits<double>::infinity());
    for (std::size_t c = 0; c < label_count; ++c) {
        if (counts[c] == 0.0)
            continue;
        nb.log_prior_[c] = std::log(counts[c] / total);
        for (std::size_t f = 0; f < d; ++f)
            nb.variance_[c * d + f] = std::max(nb.variance_[c * d + f] / counts[c], variance_floor);
    }
    return nb;
}

void NaiveBayes::predict_proba(std::span<const double> x, std::span<double> out) const {
    const std::size_t d = feature_count_;
    const double neg_inf = -std::numeric_limits<double>::infinity();
    double best = neg_inf;
    for (std::size_t c = 0; c < label_count_; ++c) {
        double lp = log_prior_[c];
        if (lp != neg_inf) {
            for (std::size_t f = 0; f < d; ++f) {
                const double var = variance_[c * d + f];
                const double diff = x[f] - mean_[c * d + f];
                lp -= 0.5 * std::log(2.0 * std::numbers::pi * var) + diff * diff / (2.0 * var);
            }
        }
        out[c] = lp;
        best = std::max(best, lp);
    }
    double z = 0.0;
    for (std::size_t c = 0; c < label_count_; ++c) {
        out[c] = out[c] == neg_inf ? 0.0 : std::exp(out[c] - best);
        z += out[c];
    }
    for (std::size_t c = 0; c < label_count_; ++c)
        out[c] /= z;
}

} // namespace netlabel
