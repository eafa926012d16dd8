#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netlabel/measures.hpp"

namespace netlabel {

enum class SelectionMode { direct, neighbour, random };
enum class Direction { top, bottom };

std::string_view to_string(SelectionMode m);
std::string_view to_string(Direction d);
std::optional<SelectionMode> parse_selection_mode(std::string_view s);
std::optional<Direction> parse_direction(std::string_view s);

class StrategyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A seed-selection recipe. Measure and direction are meaningless for random.
struct Strategy {
    SelectionMode mode = SelectionMode::random;
    Measure measure = Measure::indegree;
    Direction direction = Direction::top;

    static Strategy random() { return {}; }
    static Strategy direct(Measure m, Direction d) { return {SelectionMode::direct, m, d}; }
    static Strategy neighbour(Measure m, Direction d) { return {SelectionMode::neighbour, m, d}; }

    bool is_random() const noexcept { return mode == SelectionMode::random; }

    /// "mode:measure:direction", or "random".
    std::string to_string() const;
    /// Throws StrategyError on malformed input.
    static Strategy parse(std::string_view text);

    friend bool operator==(const Strategy &a, const Strategy &b) {
        if (a.mode != b.mode)
            return false;
        return a.is_random() || (a.measure == b.measure && a.direction == b.direction);
    }
};

/**
 * The 29-strategy catalogue in canonical order: direct strategies for each
 * measure (top, then bottom), then the same for neighbour mode, then random.
 */
std::vector<Strategy> enumerate_strategies();

/// Position of `s` in enumerate_strategies().
std::size_t canonical_index(const Strategy &s);

} // namespace netlabel
