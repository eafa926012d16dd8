#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "netlabel/eval.hpp"
#include "oracles.hpp"

using namespace netlabel;

namespace {

Labeling make(std::vector<LabelIndex> a, std::size_t labels = 2) {
    std::vector<Label> names;
    for (std::size_t l = 0; l < labels; ++l)
        names.push_back("c" + std::to_string(l));
    return Labeling(names, std::move(a));
}

std::vector<NodeIndex> first(std::size_t n) {
    std::vector<NodeIndex> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

} // namespace

TEST_CASE("classification error examples") {
    const Labeling truth = make({0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
    CHECK(classification_error(truth, truth, first(10)) == 0.0);

    std::vector<LabelIndex> flipped;
    for (LabelIndex l : truth.assignment())
        flipped.push_back(1 - l);
    CHECK(classification_error(make(flipped), truth, first(10)) == 1.0);

    const Labeling t8 = make({0, 0, 0, 0, 1, 1, 1, 1});
    const Labeling p8 = make({1, 1, 1, 0, 1, 1, 1, 1});
    CHECK(classification_error(p8, t8, first(8)) == 0.375);

    CHECK(classification_error(p8, t8, {}) == 0.0);
    CHECK_THROWS_AS(classification_error(make({0, -1}), make({0, 1}), first(2)), EvalError);
}

TEST_CASE("classification error compares label names across label sets") {
    const Labeling truth(std::vector<Label>{"a", "b", "c"}, {0, 1, 2});
    const Labeling pred(std::vector<Label>{"b", "c"}, {0, 0, 1});
    // node 0: b vs a, node 1: b vs b, node 2: c vs c
    CHECK(classification_error(pred, truth, first(3)) == doctest::Approx(1.0 / 3));
}

TEST_CASE("classification error is invariant under relabelling") {
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + gen() % 30, L = 2 + gen() % 4;
        std::vector<LabelIndex> t(n), p(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = static_cast<LabelIndex>(gen() % L);
            p[i] = static_cast<LabelIndex>(gen() % L);
        }
        std::vector<LabelIndex> perm(L);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), gen);
        std::vector<LabelIndex> t2(n), p2(n);
        for (std::size_t i = 0; i < n; ++i) {
            t2[i] = perm[t[i]];
            p2[i] = perm[p[i]];
        }
        CHECK(classification_error(make(p, L), make(t, L), first(n)) ==
              classification_error(make(p2, L), make(t2, L), first(n)));
    }
}

TEST_CASE("kl divergence examples") {
    const std::vector<LabelIndex> full{0, 0, 1, 2, 2, 2};
    CHECK(kl_divergence(full, full, 3) == 0.0);
    CHECK(kl_divergence(full, full, 3, 0.0) == 0.0);

    const std::vector<double> p{0.5, 0.5}, q{0.75, 0.25};
    CHECK(kl_divergence(p, q) == doctest::Approx(0.1438).epsilon(1e-3));
    CHECK(std::abs(kl_divergence(p, q) - 0.1438) < 1e-4);

    // same numbers through label multisets with smoothing 0
    CHECK(std::abs(kl_divergence(std::vector<LabelIndex>{0, 0, 0, 1}, std::vector<LabelIndex>{0, 1}, 2, 0.0) - 0.1438) <
          1e-4);

    CHECK_THROWS_AS(kl_divergence(full, std::vector<LabelIndex>{}, 3), EvalError);
    CHECK(std::isinf(kl_divergence(std::vector<LabelIndex>{0}, std::vector<LabelIndex>{0, 1}, 2, 0.0)));
    // smoothing keeps a missing class finite
    CHECK(std::isfinite(kl_divergence(std::vector<LabelIndex>{0}, std::vector<LabelIndex>{0, 1}, 2)));
}

TEST_CASE("kl divergence is non-negative and zero on identical multisets") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t L = 1 + gen() % 8;
        std::vector<LabelIndex> a(1 + gen() % 40), b(gen() % 40);
        for (auto &x : a)
            x = static_cast<LabelIndex>(gen() % L);
        for (auto &x : b)
            x = static_cast<LabelIndex>(gen() % L);
        const double smoothing = trial % 3 == 0 ? 0.5 : 1.0;
        CHECK(kl_divergence(b, a, L, smoothing) >= 0.0);
        CHECK(kl_divergence(a, a, L, smoothing) == 0.0);
    }
}

TEST_CASE("class coverage and uncovered fraction") {
    const Labeling truth = make({0, 1, 2, 3, 0, 1}, 4);
    SeedSet all{{0, 1, 2, 3}, 4};
    CHECK(class_coverage(all, truth) == 1.0);
    CHECK(uncovered_fraction(all, truth) == 0.0);
    SeedSet none{{}, 3};
    CHECK(class_coverage(none, truth) == 0.0);
    CHECK(uncovered_fraction(none, truth) == 1.0);
    SeedSet half{{0, 1, 4}, 3};
    CHECK(class_coverage(half, truth) == 0.5);
    CHECK(uncovered_fraction(half, truth) == 0.5);
}

TEST_CASE("better than random count") {
    std::vector<double> below(14, 0.1);
    CHECK(better_than_random_count(below, 0.2) == 14);
    std::vector<double> equal(14, 0.2);
    CHECK(better_than_random_count(equal, 0.2) == 0);
    std::vector<double> mixed{0.1, 0.3, 0.19, 0.2, 0.5, 0.05, 0.2, 0.21, 0.3, 0.3, 0.3, 0.3, 0.3, 0.199};
    CHECK(better_than_random_count(mixed, 0.2) == 4);
    CHECK_THROWS_AS(better_than_random_count(std::vector<double>(13, 0.1), 0.2), EvalError);
    CHECK_THROWS_AS(better_than_random_count(std::vector<double>(15, 0.1), 0.2), EvalError);

    std::mt19937_64 gen(2);
    for (int i = 0; i < 500; ++i) {
        std::vector<double> e(14);
        for (double &x : e)
            x = static_cast<double>(gen() % 5) / 4;
        const std::size_t c = better_than_random_count(e, static_cast<double>(gen() % 5) / 4);
        CHECK(c <= 14);
    }
}

TEST_CASE("regression examples") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    const std::vector<double> line{3, 5, 7, 9, 11};
    for (bool robust : {true, false}) {
        const RegressionFit f = robust_regression(x, line, robust);
        CHECK(std::abs(f.slope - 2.0) < 1e-9);
        CHECK(std::abs(f.intercept - 1.0) < 1e-9);
        CHECK(f.r_squared == doctest::Approx(1.0));
        CHECK(f.robust == robust);
    }
    const RegressionFit flat = robust_regression(x, std::vector<double>{4, 4, 4, 4, 4});
    CHECK(std::abs(flat.slope) < 1e-12);
    CHECK(flat.r_squared == 0.0);

    CHECK_THROWS_AS(robust_regression(std::vector<double>{1, 2}, std::vector<double>{1, 2}), EvalError);
    CHECK_THROWS_AS(robust_regression(std::vector<double>{2, 2, 2}, std::vector<double>{1, 2, 3}), EvalError);
}

TEST_CASE("huber resists a gross outlier where OLS does not") {
    const std::vector<double> x{1, 2, 3, 4, 5, 6};
    // five points on y = x, the sixth 10 units above it
    const std::vector<double> y{1, 2, 3, 4, 5, 16};
    const RegressionFit h = robust_regression(x, y, true);
    const RegressionFit o = robust_regression(x, y, false);
    const auto hand = oracle::ols(x, y);
    CHECK(o.slope == doctest::Approx(hand.slope).epsilon(1e-12));
    CHECK(o.intercept == doctest::Approx(hand.intercept).epsilon(1e-12));
    CHECK(std::abs(h.slope - 1.0) < 0.05);
    CHECK(std::abs(o.slope - 1.0) > 0.2);
    CHECK(h.r_squared >= 0.0);
    CHECK(h.r_squared <= 1.0);
}

TEST_CASE("huber equals OLS when every residual is small") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 3 + gen() % 20;
        std::vector<double> x(n), y(n);
        const double a = std::uniform_real_distribution<double>(-3, 3)(gen);
        const double b = std::uniform_real_distribution<double>(-3, 3)(gen);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<double>(i) + std::uniform_real_distribution<double>(0, 0.5)(gen);
            y[i] = a * x[i] + b;
        }
        for (std::size_t i = 0; i < n; ++i)
            y[i] += (i % 2 ? 1e-3 : -1e-3);
        const auto hand = oracle::ols(x, y);
        std::vector<double> r(n), dev(n);
        for (std::size_t i = 0; i < n; ++i)
            r[i] = y[i] - (hand.intercept + hand.slope * x[i]);
        auto med = [](std::vector<double> v) {
            std::sort(v.begin(), v.end());
            return v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
        };
        const double centre = med(r);
        for (std::size_t i = 0; i < n; ++i)
            dev[i] = std::abs(r[i] - centre);
        const double threshold = 1.345 * med(dev) / 0.6745;
        if (std::any_of(r.begin(), r.end(), [&](double v) { return std::abs(v) > threshold; }) && threshold > 1e-9)
            continue;
        const RegressionFit h = robust_regression(x, y, true);
        const RegressionFit o = robust_regression(x, y, false);
        CHECK(h.slope == o.slope);
        CHECK(h.intercept == o.intercept);
        CHECK(o.slope == doctest::Approx(hand.slope).epsilon(1e-9));
        CHECK(o.r_squared >= 0.0);
        CHECK(o.r_squared <= 1.0);
    }
}

TEST_CASE("algorithm names") {
    CHECK(parse_algorithm("ica") == Algorithm::ica);
    CHECK(parse_algorithm(to_string(Algorithm::lbp)) == Algorithm::lbp);
    CHECK(!parse_algorithm("gibbs"));
}
