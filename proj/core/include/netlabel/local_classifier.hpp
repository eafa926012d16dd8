#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "netlabel/labeling.hpp"
#include "netlabel/random.hpp"

namespace netlabel {

class ClassifierError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Row-major feature matrix with one label per row.
struct TrainingSet {
    std::size_t feature_count = 0;
    std::vector<double> features;
    std::vector<LabelIndex> labels;

    std::size_t rows() const noexcept { return labels.size(); }
    std::span<const double> row(std::size_t i) const {
        return std::span<const double>(features).subspan(i * feature_count, feature_count);
    }
    void add(std::span<const double> x, LabelIndex label);
};

struct ForestParams {
    int trees = 50;
    std::size_t min_leaf = 2;     // smallest sample count a leaf may hold
    std::size_t max_features = 0; // features tried per split; 0 means floor(sqrt(d))
};

/// Bagged CART trees with Gini splits and per-split feature subsampling.
class TreeEnsemble {
public:
    static TreeEnsemble train(const TrainingSet &data, std::size_t label_count, const ForestParams &params, Rng &rng);

    /// Mean of the trees' leaf class frequencies; `out` has label_count entries.
    void predict_proba(std::span<const double> x, std::span<double> out) const;

    std::size_t tree_count() const noexcept { return trees_.size(); }

    friend bool operator==(const TreeEnsemble &, const TreeEnsemble &) = default;

private:
    struct Node {
        std::int32_t feature = -1; // -1 marks a leaf
        double threshold = 0.0;    // x[feature] <= threshold goes left
        std::uint32_t left = 0;
        std::uint32_t right = 0;
        std::uint32_t leaf = 0; // offset into Tree::leaf_probs

        friend bool operator==(const Node &, const Node &) = default;
    };
    struct Tree {
        std::vector<Node> nodes;
        std::vector<double> leaf_probs;

        friend bool operator==(const Tree &, const Tree &) = default;
    };
    class Builder;

    std::size_t label_count_ = 0;
    std::vector<Tree> trees_;
};

/// Gaussian naive Bayes with a per-feature variance floor.
class NaiveBayes {
public:
    static NaiveBayes train(const TrainingSet &data, std::size_t label_count, double variance_floor = 1e-9);

    void predict_proba(std::span<const double> x, std::span<double> out) const;

    friend bool operator==(const NaiveBayes &, const NaiveBayes &) = default;

private:
    std::size_t label_count_ = 0;
    std::size_t feature_count_ = 0;
    std::vector<double> log_prior_; // -inf for classes absent from training
    std::vector<double> mean_;      // label_count x feature_count
    std::vector<double> variance_;
};

enum class ClassifierKind { tree_ensemble, naive_bayes };

std::string_view to_string(ClassifierKind k);
std::optional<ClassifierKind> parse_classifier_kind(std::string_view s);

struct ClassifierConfig {
    ClassifierKind kind = ClassifierKind::tree_ensemble;
    ForestParams forest;
    double variance_floor = 1e-9;
};

/**
 * The local model used by ICA. It predicts a distribution over the full
 * label set; labels absent from training always get probability zero.
 */
class LocalClassifier {
public:
    /// Throws ClassifierError on an empty training set.
    static LocalClassifier train(const TrainingSet &data, std::size_t label_count, const ClassifierConfig &cfg,
                                 Rng &rng);

    std::vector<double> predict_proba(std::span<const double> x) const;
    void predict_proba(std::span<const double> x, std::span<double> out) const;
    /// Most probable label; ties go to the lowest label index.
    LabelIndex predict(std::span<const double> x) const;

    ClassifierKind kind() const noexcept {
        return std::holds_alternative<TreeEnsemble>(model_) ? ClassifierKind::tree_ensemble
                                                            : ClassifierKind::naive_bayes;
    }
    std::size_t label_count() const noexcept { return label_count_; }

    friend bool operator==(const LocalClassifier &, const LocalClassifier &) = default;

private:
    std::size_t label_count_ = 0;
    std::variant<TreeEnsemble, NaiveBayes> model_;
};

} // namespace netlabel
