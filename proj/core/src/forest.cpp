#include <algorithm>
#include <cmath>
#include <numeric>

#include "netlabel/local_classifier.hpp"

namespace netlabel {

void TrainingSet::add(std::span<const double> x, LabelIndex label) {
    if (x.size() != feature_count)
        throw ClassifierError("training row has " + std::to_string(x.size()) + " features, expected " +
                              std::to_string(feature_count));
    features.insert(features.end(), x.begin(), x.end());
    labels.push_back(label);
}

class TreeEnsemble::Builder {
public:
    Builder(const TrainingSet &data, std::size_t label_count, const ForestParams &params, std::size_t mtry, Rng &rng)
        : data_(data), label_count_(label_count), params_(params), mtry_(mtry), rng_(rng),
          features_(data.feature_count) {
        std::iota(features_.begin(), features_.end(), std::size_t{0});
    }

    Tree build(std::vector<std::uint32_t> samples) {
        samples_ = std::move(samples);
        tree_ = Tree{};
        grow(0, samples_.size());
        return std::move(tree_);
    }

private:
    struct Split {
        std::size_t feature = 0;
        double threshold = 0.0;
        double score = -1.0;
    };

    std::uint32_t grow(std::size_t begin, std::size_t end) {
        const auto id = static_cast<std::uint32_t>(tree_.nodes.size());
        tree_.nodes.emplace_back();

        std::vector<double> counts(label_count_, 0.0);
        for (std::size_t i = begin; i < end; ++i)
            counts[static_cast<std::size_t>(data_.labels[samples_[i]])] += 1.0;
        const std::size_t n = end - begin;
        const auto nonzero = std::count_if(counts.begin(), counts.end(), [](double c) { return c > 0.0; });

        std::optional<Split> split;
        if (nonzero > 1 && n >= 2 * params_.min_leaf)
            split = best_split(begin, end, counts);
        if (!split) {
            make_leaf(id, counts, n);
            return id;
        }

        const auto f = split->feature;
        const double thr = split->threshold;
        const auto mid_it = std::stable_partition(
            samples_.begin() + static_cast<std::ptrdiff_t>(begin), samples_.begin() + static_cast<std::ptrdiff_t>(end),
            [&](std::uint32_t s) { return data_.row(s)[f] <= thr; });
        const auto mid = static_cast<std::size_t>(mid_it - samples_.begin());

        const auto left = grow(begin, mid);
        const auto right = grow(mid, end);
        auto &node = tree_.nodes[id];
        node.feature = static_cast<std::int32_t>(f);
        node.threshold = thr;
        node.left = left;
        node.right = right;
        return id;
    }

    void make_leaf(std::uint32_t id, const std::vector<double> &counts, std::size_t n) {
        auto &node = tree_.nodes[id];
        node.feature = -1;
        node.leaf = static_cast<std::uint32_t>(tree_.leaf_probs.size());
        for (double c : counts)
            tree_.leaf_probs.push_back(c / static_cast<double>(n));
    }

    // Tries mtry random features; keeps scanning the rest only while no
    // usable split has been found.
    std::optional<Split> best_split(std::size_t begin, std::size_t end, const std::vector<double> &parent_counts) {
        shuffle(std::span<std::size_t>(features_), rng_);
        const std::size_t n = end - begin;
        double parent_sq = 0.0;
        for (double c : parent_counts)
            parent_sq += c * c;
        const double parent_score = parent_sq / static_cast<double>(n);

        std::optional<Split> best;
        std::vector<std::pair<double, LabelIndex>> column(n);
        std::vector<double> left(label_count_);
        std::vector<double> right(label_count_);
        for (std::size_t k = 0; k < features_.size(); ++k) {
            if (k >= mtry_ && best)
                break;
            const std::size_t f = features_[k];
            for (std::size_t i = 0; i < n; ++i) {
                const auto s = samples_[begin + i];
                column[i] = {data_.row(s)[f], data_.labels[s]};
            }
            std::sort(column.begin(), column.end());
            if (column.front().first == column.back().first)
                continue;

            std::fill(left.begin(), left.end(), 0.0);
            right = parent_counts;
            double left_sq = 0.0;
            double right_sq = parent_sq;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const auto c = static_cast<std::size_t>(column[i].second);
                left_sq += 2.0 * left[c] + 1.0;
                right_sq -= 2.0 * right[c] - 1.0;
                left[c] += 1.0;
                right[c] -= 1.0;
                const double a = column[i].first;
                const double b = column[i + 1].first;
                if (a == b)
                    continue;
                const std::size_t nl = i + 1;
                const std::size_t nr = n - nl;
                if (nl < params_.min_leaf || nr < params_.min_leaf)
                    continue;
                const double score = left_sq / static_cast<double>(nl) + right_sq / static_cast<double>(nr);
                if (score <= parent_score + 1e-12)
                    continue;
                if (!best || score > best->score) {
                    double thr = a + (b - a) / 2.0;
                    if (thr >= b)
                        thr = a;
                    best = Split{f, thr, score};
                }
            }
        }
        return best;
    }

    const TrainingSet &data_;
    std::size_t label_count_;
    const ForestParams &params_;
    std::size_t mtry_;
    Rng &rng_;
    std::vector<std::size_t> features_;
    std::vector<std::uint32_t> samples_;
    Tree tree_;
};

TreeEnsemble TreeEnsemble::train(const TrainingSet &data, std::size_t label_count, const ForestParams &params,
                                 Rng &rng) {
    if (data.rows() == 0)
        throw ClassifierError("cannot train on an empty training set");
    if (params.trees < 1)
        throw ClassifierError("a forest needs at least one tree");
    if (params.min_leaf < 1)
        throw ClassifierError("min_leaf must be at least 1");
    const std::size_t d = data.feature_count;
    std::size_t mtry = params.max_features;
    if (mtry == 0)
        mtry = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(d))));
    mtry = std::clamp<std::size_t>(mtry, 1, std::max<std::size_t>(d, 1));

    TreeEnsemble forest;
    forest.label_count_ = label_count;
    const std::size_t n = data.rows();
    for (int t = 0; t < params.trees; ++t) {
        Rng tree_rng(rng());
        std::vector<std::uint32_t> bag(n);
        for (auto &s : bag)
            s = static_cast<std::uint32_t>(uniform_index(tree_rng, n));
        Builder builder(data, label_count, params, mtry, tree_rng);
        forest.trees_.push_back(builder.build(std::move(bag)));
    }
    return forest;
}

void TreeEnsemble::predict_proba(std::span<const double> x, std::span<double> out) const {
    std::fill(out.begin(), out.end(), 0.0);
    for (const auto &tree : trees_) {
        std::uint32_t id = 0;
        while (tree.nodes[id].feature >= 0) {
            const auto &node = tree.nodes[id];
            id = x[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left : node.right;
        }
        const auto offset = tree.nodes[id].leaf;
        for (std::size_t l = 0; l < label_count_; ++l)
            out[l] += tree.leaf_probs[offset + l];
    }
    const double inv = 1.0 / static_cast<double>(trees_.size());
    for (double &p : out)
        p *= inv;
}

} // namespace netlabel
