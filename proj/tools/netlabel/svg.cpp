#include "svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace netlabel::app::svg {

namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 460;
constexpr double kLeft = 70;
constexpr double kRight = 230; // legend column
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr std::array<const char *, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

struct Frame {
    double x0, x1, y0, y1;

    double px(double x) const { return kLeft + (x - x0) / (x1 - x0) * (kWidth - kLeft - kRight); }
    double py(double y) const { return kHeight - kBottom - (y - y0) / (y1 - y0) * (kHeight - kTop - kBottom); }
};

Frame frame_for(const std::vector<Series> &series, bool y_from_zero) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    for (const auto &s : series) {
        for (double v : s.x)
            if (std::isfinite(v)) {
                x0 = std::min(x0, v);
                x1 = std::max(x1, v);
            }
        for (double v : s.y)
            if (std::isfinite(v)) {
                y0 = std::min(y0, v);
                y1 = std::max(y1, v);
            }
    }
    if (!std::isfinite(x0)) {
        x0 = 0;
        x1 = 1;
        y0 = 0;
        y1 = 1;
    }
    if (y_from_zero)
        y0 = std::min(0.0, y0);
    if (x1 == x0) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    if (y1 == y0) {
        y0 -= 0.5;
        y1 += 0.5;
    }
    const double pad = (y1 - y0) * 0.05;
    return {x0, x1, y_from_zero && y0 == 0.0 ? 0.0 : y0 - pad, y1 + pad};
}

void open(std::ostringstream &o, const Axes &axes) {
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << num((kWidth - kRight + kLeft) / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(axes.title) << "</text>\n";
}

void draw_axes(std::ostringstream &o, const Axes &axes, const Frame &f, bool x_ticks) {
    const double xa = kLeft, xb = kWidth - kRight, ya = kHeight - kBottom, yb = kTop;
    o << "<line x1=\"" << xa << "\" y1=\"" << ya << "\" x2=\"" << xb << "\" y2=\"" << ya << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << xa << "\" y1=\"" << ya << "\" x2=\"" << xa << "\" y2=\"" << yb << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double yv = f.y0 + (f.y1 - f.y0) * i / 5.0;
        const double y = f.py(yv);
        o << "<line x1=\"" << xa - 4 << "\" y1=\"" << num(y) << "\" x2=\"" << xb << "\" y2=\"" << num(y)
          << "\" stroke=\"#e0e0e0\"/>\n";
        o << "<text x=\"" << xa - 8 << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << tick(yv) << "</text>\n";
        if (x_ticks) {
            const double xv = f.x0 + (f.x1 - f.x0) * i / 5.0;
            o << "<text x=\"" << num(f.px(xv)) << "\" y=\"" << ya + 18 << "\" text-anchor=\"middle\">" << tick(xv)
              << "</text>\n";
        }
    }
    o << "<text x=\"" << num((xa + xb) / 2) << "\" y=\"" << kHeight - 15 << "\" text-anchor=\"middle\">"
      << escape(axes.x_label) << "</text>\n";
    o << "<text transform=\"translate(18," << num((ya + yb) / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(axes.y_label) << "</text>\n";
}

void legend(std::ostringstream &o, const std::vector<std::string> &names) {
    const double x = kWidth - kRight + 15;
    const double row = std::min(16.0, (kHeight - kTop - 10) / std::max<double>(1.0, static_cast<double>(names.size())));
    for (std::size_t i = 0; i < names.size(); ++i) {
        const double y = kTop + row * static_cast<double>(i);
        o << "<rect x=\"" << x << "\" y=\"" << num(y) << "\" width=\"10\" height=\"10\" fill=\""
          << kPalette[i % kPalette.size()] << "\"/>\n";
        o << "<text x=\"" << x + 14 << "\" y=\"" << num(y + 9) << "\" font-size=\"10\">" << escape(names[i])
          << "</text>\n";
    }
}

} // namespace

std::string line_plot(const Axes &axes, const std::vector<Series> &series) {
    std::ostringstream o;
    const Frame f = frame_for(series, true);
    open(o, axes);
    draw_axes(o, axes, f, true);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto &s = series[i];
        names.push_back(s.name);
        o << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << kPalette[i % kPalette.size()]
          << "\" points=\"";
        for (std::size_t k = 0; k < s.x.size(); ++k)
            if (std::isfinite(s.y[k]))
                o << num(f.px(s.x[k])) << ',' << num(f.py(s.y[k])) << ' ';
        o << "\"/>\n";
    }
    legend(o, names);
    o << "</svg>\n";
    return o.str();
}

std::string bar_plot(const Axes &axes, const std::vector<std::string> &categories, const std::vector<double> &values) {
    std::ostringstream o;
    Series all{"", {}, values};
    for (std::size_t i = 0; i < values.size(); ++i)
        all.x.push_back(static_cast<double>(i));
    Frame f = frame_for({all}, true);
    f.x0 = -0.5;
    f.x1 = static_cast<double>(values.size()) - 0.5;
    open(o, axes);
    draw_axes(o, axes, f, false);
    const double slot = (kWidth - kLeft - kRight) / std::max<double>(1.0, static_cast<double>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]))
            continue;
        const double cx = f.px(static_cast<double>(i));
        const double top = f.py(values[i]);
        const double base = f.py(std::max(0.0, f.y0));
        o << "<rect x=\"" << num(cx - slot * 0.35) << "\" y=\"" << num(std::min(top, base)) << "\" width=\""
          << num(slot * 0.7) << "\" height=\"" << num(std::abs(base - top)) << "\" fill=\""
          << kPalette[i % kPalette.size()] << "\"/>\n";
    }
    legend(o, categories);
    o << "</svg>\n";
    return o.str();
}

std::string scatter_plot(const Axes &axes, const std::vector<Series> &series, const std::vector<FittedLine> &fits) {
    std::ostringstream o;
    const Frame f = frame_for(series, false);
    open(o, axes);
    draw_axes(o, axes, f, true);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto &s = series[i];
        names.push_back(s.name);
        for (std::size_t k = 0; k < s.x.size(); ++k)
            o << "<circle cx=\"" << num(f.px(s.x[k])) << "\" cy=\"" << num(f.py(s.y[k])) << "\" r=\"4\" fill=\""
              << kPalette[i % kPalette.size()] << "\"/>\n";
    }
    for (std::size_t i = 0; i < fits.size(); ++i) {
        const auto &line = fits[i];
        const double ya = line.intercept + line.slope * f.x0;
        const double yb = line.intercept + line.slope * f.x1;
        o << "<line x1=\"" << num(f.px(f.x0)) << "\" y1=\"" << num(f.py(ya)) << "\" x2=\"" << num(f.px(f.x1))
          << "\" y2=\"" << num(f.py(yb)) << "\" stroke-dasharray=\"6,3\" stroke=\""
          << kPalette[(series.size() + i) % kPalette.size()] << "\"/>\n";
        names.push_back(line.name);
    }
    legend(o, names);
    o << "</svg>\n";
    return o.str();
}

} // namespace netlabel::app::svg
