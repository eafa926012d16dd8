#include "netlabel/labeling.hpp"

#include <algorithm>

namespace netlabel {

Labeling::Labeling(std::vector<Label> label_set, std::vector<LabelIndex> assignment)
    : label_set_(std::move(label_set)), assignment_(std::move(assignment)) {
    if (!std::is_sorted(label_set_.begin(), label_set_.end()) ||
        std::adjacent_find(label_set_.begin(), label_set_.end()) != label_set_.end())
        throw LabelingError("label set must be sorted and unique");
    const auto n_labels = static_cast<LabelIndex>(label_set_.size());
    for (LabelIndex l : assignment_)
        if (l != kUnlabelled && (l < 0 || l >= n_labels))
            throw LabelingError("label index " + std::to_string(l) + " outside the label set");
}

Labeling Labeling::empty_like(const Labeling &other) {
    return Labeling(other.label_set_, std::vector<LabelIndex>(other.node_count(), kUnlabelled));
}

std::optional<LabelIndex> Labeling::find_label(std::string_view name) const {
    auto it = std::lower_bound(label_set_.begin(), label_set_.end(), name);
    if (it == label_set_.end() || *it != name)
        return std::nullopt;
    return static_cast<LabelIndex>(it - label_set_.begin());
}

std::vector<NodeIndex> Labeling::known() const {
    std::vector<NodeIndex> out;
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        if (assignment_[v] != kUnlabelled)
            out.push_back(static_cast<NodeIndex>(v));
    return out;
}

std::vector<NodeIndex> Labeling::unknown() const {
    std::vector<NodeIndex> out;
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        if (assignment_[v] == kUnlabelled)
            out.push_back(static_cast<NodeIndex>(v));
    return out;
}

std::size_t Labeling::known_count() const {
    return static_cast<std::size_t>(
        std::count_if(assignment_.begin(), assignment_.end(), [](LabelIndex l) { return l != kUnlabelled; }));
}

void Labeling::assign(NodeIndex v, LabelIndex l) {
    if (l != kUnlabelled && (l < 0 || static_cast<std::size_t>(l) >= label_set_.size()))
        throw LabelingError("label index " + std::to_string(l) + " outside the label set");
    assignment_.at(v) = l;
}

Labeling Labeling::restricted_to(std::span<const NodeIndex> nodes) const {
    Labeling out = empty_like(*this);
    for (NodeIndex v : nodes)
        out.assignment_.at(v) = assignment_.at(v);
    return out;
}

} // namespace netlabel
