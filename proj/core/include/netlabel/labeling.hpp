#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netlabel/graph.hpp"

namespace netlabel {

using Label = std::string;

/// Position of a label in the sorted label set.
using LabelIndex = std::int32_t;
inline constexpr LabelIndex kUnlabelled = -1;

class LabelingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Partial assignment of labels to the nodes of one graph.
 *
 * Nodes with an assignment form the known set, the rest the unknown set.
 * The label set is kept sorted; label indices follow that order, so the
 * lowest index is the lexicographically smallest label.
 */
class Labeling {
public:
    Labeling() = default;
    /// `label_set` must be sorted and unique; every assignment is either
    /// kUnlabelled or a valid index into it.
    Labeling(std::vector<Label> label_set, std::vector<LabelIndex> assignment);

    /// Every node unknown.
    static Labeling empty_like(const Labeling &other);

    std::size_t node_count() const noexcept { return assignment_.size(); }
    std::size_t label_count() const noexcept { return label_set_.size(); }
    std::span<const Label> label_set() const noexcept { return label_set_; }
    const Label &label_name(LabelIndex l) const { return label_set_.at(static_cast<std::size_t>(l)); }
    std::optional<LabelIndex> find_label(std::string_view name) const;

    LabelIndex at(NodeIndex v) const { return assignment_.at(v); }
    bool is_known(NodeIndex v) const { return assignment_.at(v) != kUnlabelled; }
    std::span<const LabelIndex> assignment() const noexcept { return assignment_; }

    std::vector<NodeIndex> known() const;
    std::vector<NodeIndex> unknown() const;
    std::size_t known_count() const;

    void assign(NodeIndex v, LabelIndex l);

    /// Same label set; only the listed nodes keep their labels.
    Labeling restricted_to(std::span<const NodeIndex> nodes) const;

    friend bool operator==(const Labeling &, const Labeling &) = default;

private:
    std::vector<Label> label_set_;
    std::vector<LabelIndex> assignment_;
};

} // namespace netlabel
