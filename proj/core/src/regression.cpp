#include <algorithm>
#include <cmath>
#include <vector>

#include "netlabel/eval.hpp"

namespace netlabel {

namespace {

struct Line {
    double slope;
    double intercept;
};

Line weighted_fit(std::span<const double> x, std::span<const double> y, std::span<const double> w) {
    double sw = 0.0;
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sw += w[i];
        sx += w[i] * x[i];
        sy += w[i] * y[i];
    }
    const double mx = sx / sw;
    const double my = sy / sw;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += w[i] * (x[i] - mx) * (x[i] - mx);
        sxy += w[i] * (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0)
        throw EvalError("weighted x variance vanished");
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

double median(std::vector<double> v) {
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    if (v.size() % 2 == 1)
        return *mid;
    const double hi = *mid;
    const double lo = *std::max_element(v.begin(), mid);
    return (lo + hi) / 2.0;
}

double r_squared(std::span<const double> x, std::span<const double> y, const Line &fit) {
    double my = 0.0;
    for (double v : y)
        my += v;
    my /= static_cast<double>(y.size());
    double ss_tot = 0.0;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss_res += r * r;
        ss_tot += (y[i] - my) * (y[i] - my);
    }
    if (ss_tot == 0.0)
        return 0.0;
    return std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
}

} // namespace

RegressionFit robust_regression(std::span<const double> x, std::span<const double> y, bool robust,
                                const HuberOptions &opts) {
    if (x.size() != y.size())
        throw EvalError("x and y differ in length");
    if (x.size() < 3)
        throw EvalError("regression needs at least 3 points");
    if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); }))
        throw EvalError("regression needs non-constant x");

    const std::size_t n = x.size();
    std::vector<double> w(n, 1.0);
    Line fit = weighted_fit(x, y, w);
    int iterations = 0;

    if (robust) {
        double y_scale = 0.0;
        for (double v : y)
            y_scale = std::max(y_scale, std::abs(v));
        std::vector<double> r(n);
        std::vector<double> dev(n);
        for (int iter = 0; iter < opts.max_iter; ++iter) {
            for (std::size_t i = 0; i < n; ++i)
                r[i] = y[i] - (fit.intercept + fit.slope * x[i]);
            const double med = median(r);
            for (std::size_t i = 0; i < n; ++i)
                dev[i] = std::abs(r[i] - med);
            const double scale = median(dev) / 0.6745;
            if (scale <= 1e-12 * (1.0 + y_scale))
                break; // the bulk of the data already lies on the line
            for (std::size_t i = 0; i < n; ++i) {
                const double u = std::abs(r[i]) / scale;
                w[i] = u <= opts.tuning ? 1.0 : opts.tuning / u;
            }
            const Line next = weighted_fit(x, y, w);
            iterations = iter + 1;
            const double step = std::abs(next.slope - fit.slope) + std::abs(next.intercept - fit.intercept);
            fit = next;
            if (step < opts.tol * (1.0 + std::abs(fit.slope) + std::abs(fit.intercept)))
                break;
        }
    }
    return RegressionFit{fit.slope, fit.intercept, r_squared(x, y, fit), robust, iterations};
}

} // namespace netlabel
