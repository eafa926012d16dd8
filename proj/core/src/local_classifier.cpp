#include "netlabel/local_classifier.hpp"

namespace netlabel {

std::string_view to_string(ClassifierKind k) {
    return k == ClassifierKind::tree_ensemble ? "tree_ensemble" : "naive_bayes";
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view s) {
    if (s == "tree_ensemble" || s == "random_forest")
        return ClassifierKind::tree_ensemble;
    if (s == "naive_bayes")
        return ClassifierKind::naive_bayes;
    return std::nullopt;
}

LocalClassifier LocalClassifier::train(const TrainingSet &data, std::size_t label_count, const ClassifierConfig &cfg,
                                       Rng &rng) {
    if (data.rows() == 0)
        throw ClassifierError("cannot train on an empty training set");
    if (label_count == 0)
        throw ClassifierError("label set is empty");
    for (LabelIndex l : data.labels)
        if (l < 0 || static_cast<std::size_t>(l) >= label_count)
            throw ClassifierError("training label outside the label set");

    LocalClassifier c;
    c.label_count_ = label_count;
    if (cfg.kind == ClassifierKind::tree_ensemble)
        c.model_ = TreeEnsemble::train(data, label_count, cfg.forest, rng);
    else
        c.model_ = NaiveBayes::train(data, label_count, cfg.variance_floor);
    return c;
}

void LocalClassifier::predict_proba(std::span<const double> x, std::span<double> out) const {
    std::visit([&](const auto &m) { m.predict_proba(x, out); }, model_);
}

std::vector<double> LocalClassifier::predict_proba(std::span<const double> x) const {
    std::vector<double> out(label_count_);
    predict_proba(x, out);
    return out;
}

LabelIndex LocalClassifier::predict(std::span<const double> x) const {
    const auto p = predict_proba(x);
    std::size_t best = 0;
    for (std::size_t l = 1; l < p.size(); ++l)
        if (p[l] > p[best])
            best = l;
    return static_cast<LabelIndex>(best);
}

} // namespace netlabel
