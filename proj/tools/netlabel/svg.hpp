#pragma once

#include <optional>
#include <string>
#include <vector>

namespace netlabel::app::svg {

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct Axes {
    std::string title;
    std::string x_label;
    std::string y_label;
};

struct FittedLine {
    double slope;
    double intercept;
    std::string name;
};

std::string line_plot(const Axes &axes, const std::vector<Series> &series);
std::string bar_plot(const Axes &axes, const std::vector<std::string> &categories, const std::vector<double> &values);
/// Points of each series drawn as markers, plus optional fitted lines.
std::string scatter_plot(const Axes &axes, const std::vector<Series> &series, const std::vector<FittedLine> &fits);

} // namespace netlabel::app::svg
