#include "netlabel/strategy.hpp"

namespace netlabel {

std::string_view to_string(SelectionMode m) {
    switch (m) {
    case SelectionMode::direct:
        return "direct";
    case SelectionMode::neighbour:
        return "neighbour";
    case SelectionMode::random:
        break;
    }
    return "random";
}

std::string_view to_string(Direction d) {
    return d == Direction::top ? "top" : "bottom";
}

std::optional<SelectionMode> parse_selection_mode(std::string_view s) {
    if (s == "direct")
        return SelectionMode::direct;
    if (s == "neighbour")
        return SelectionMode::neighbour;
    if (s == "random")
        return SelectionMode::random;
    return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view s) {
    if (s == "top")
        return Direction::top;
    if (s == "bottom")
        return Direction::bottom;
    return std::nullopt;
}

std::string Strategy::to_string() const {
    if (is_random())
        return "random";
    std::string out(netlabel::to_string(mode));
    out += ':';
    out += netlabel::to_string(measure);
    out += ':';
    out += netlabel::to_string(direction);
    return out;
}

Strategy Strategy::parse(std::string_view text) {
    if (text == "random")
        return Strategy::random();
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos)
        throw StrategyError("strategy must be 'random' or 'mode:measure:direction', got '" + std::string(text) + "'");
    const auto mode = parse_selection_mode(text.substr(0, c1));
    const auto measure = parse_measure(text.substr(c1 + 1, c2 - c1 - 1));
    const auto direction = parse_direction(text.substr(c2 + 1));
    if (!mode || *mode == SelectionMode::random)
        throw StrategyError("unknown selection mode in '" + std::string(text) + "'");
    if (!measure)
        throw StrategyError("unknown measure in '" + std::string(text) + "'");
    if (!direction)
        throw StrategyError("unknown direction in '" + std::string(text) + "'");
    return Strategy{*mode, *measure, *direction};
}

std::vector<Strategy> enumerate_strategies() {
    std::vector<Strategy> out;
    for (auto mode : {SelectionMode::direct, SelectionMode::neighbour})
        for (Measure m : kAllMeasures)
            for (auto d : {Direction::top, Direction::bottom})
                out.push_back(Strategy{mode, m, d});
    out.push_back(Strategy::random());
    return out;
}

std::size_t canonical_index(const Strategy &s) {
    if (s.is_random())
        return 2 * 2 * kAllMeasures.size();
    const std::size_t mode = s.mode == SelectionMode::direct ? 0 : 1;
    return (mode * kAllMeasures.size() + static_cast<std::size_t>(s.measure)) * 2 +
           (s.direction == Direction::top ? 0 : 1);
}

} // namespace netlabel
