#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "netlabel/io.hpp"
#include "netlabel/measures.hpp"
#include "oracles.hpp"

using namespace netlabel;

namespace {

Graph parse(const std::string &text, bool directed) {
    std::istringstream in(text);
    return load_edge_list(in, directed);
}

double value(const Graph &g, const std::vector<double> &v, const char *id) {
    return v[g.index_of(id)];
}

} // namespace

TEST_CASE("measure names round trip") {
    for (Measure m : kAllMeasures)
        CHECK(parse_measure(to_string(m)) == m);
    CHECK(!parse_measure("eigenvector"));
}

TEST_CASE("triangle pagerank and clustering") {
    const Graph tri = parse("a b\nb c\na c", false);
    for (double p : pagerank(tri))
        CHECK(p == doctest::Approx(1.0 / 3).epsilon(1e-9));
    for (double c : local_clustering(tri))
        CHECK(c == 1.0);
}

TEST_CASE("path betweenness is an unnormalized pair count") {
    const Graph path = parse("a b\nb c", false);
    const auto bc = betweenness(path);
    CHECK(value(path, bc, "a") == 0.0);
    CHECK(value(path, bc, "b") == doctest::Approx(1.0));
    CHECK(value(path, bc, "c") == 0.0);
}

TEST_CASE("star center clustering is zero") {
    const Graph star = parse("c l1\nc l2\nc l3", false);
    CHECK(value(star, local_clustering(star), "c") == 0.0);
}

TEST_CASE("hits on two hubs pointing at one authority") {
    const Graph g = parse("a c\nb c", true);
    const HitsScores h = hits(g);
    CHECK(value(g, h.authority, "c") == doctest::Approx(1.0));
    CHECK(value(g, h.hub, "a") == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(value(g, h.hub, "b") == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(value(g, h.hub, "c") == doctest::Approx(0.0));
}

TEST_CASE("4-node path pagerank") {
    const Graph g = parse("a b\nb c\nc d", false);
    const auto pr = pagerank(g);
    CHECK(value(g, pr, "a") == doctest::Approx(0.1753).epsilon(1e-3));
    CHECK(value(g, pr, "b") == doctest::Approx(0.3247).epsilon(1e-3));
    const auto exact = oracle::pagerank_solve(oracle::dense({false, {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}}), 0.85);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(std::abs(pr[i] - exact[i]) < 1e-8);
}

TEST_CASE("indegree and outdegree") {
    const Graph d = parse("a b\na c\nb c", true);
    const auto in = compute_measure(d, Measure::indegree).values;
    const auto out = compute_measure(d, Measure::outdegree).values;
    CHECK(value(d, in, "c") == 2.0);
    CHECK(value(d, out, "a") == 2.0);
    CHECK(value(d, out, "c") == 0.0);

    const Graph u = parse("a b\na c\nb c\nc d", false);
    CHECK(compute_measure(u, Measure::indegree).values == compute_measure(u, Measure::outdegree).values);
}

TEST_CASE("edgeless graph measures are finite and normalized") {
    std::istringstream edges(""), nodes("a\nb\nc\n");
    const Graph g = load_edge_list(edges, true, &nodes);
    for (const auto &s : compute_all_measures(g))
        for (double v : s.values)
            CHECK(std::isfinite(v));
    const auto pr = pagerank(g);
    CHECK(std::accumulate(pr.begin(), pr.end(), 0.0) == doctest::Approx(1.0));
    CHECK_THROWS(compute_measure(Graph{}, Measure::pagerank));
}

TEST_CASE("measures agree with dense oracles on random graphs") {
    std::mt19937_64 rng(77);
    const MeasureOptions opts;
    for (int trial = 0; trial < 100; ++trial) {
        const bool directed = trial % 2 == 1;
        const std::size_t n = 1 + rng() % 12;
        const double p = std::uniform_real_distribution<double>(0.05, 0.6)(rng);
        const auto raw = oracle::random_graph(rng, n, p, directed);
        const auto dense = oracle::dense(raw);
        const Graph g = raw.build();
        CAPTURE(trial);

        const auto bc = betweenness(g);
        const auto bc_ref = oracle::betweenness(dense);
        const auto cc = local_clustering(g);
        const auto cc_ref = oracle::clustering(dense);
        const auto pr = pagerank(g);
        const auto pr_ref = oracle::pagerank_power(dense, opts.damping, opts.pagerank_tol, opts.pagerank_max_iter);
        const auto pr_exact = oracle::pagerank_solve(dense, opts.damping);
        const auto h = hits(g);
        const auto h_ref = oracle::hits_power(dense, opts.hits_tol, opts.hits_max_iter);
        double pr_sum = 0, hub_sq = 0, auth_sq = 0;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(bc[i] - bc_ref[i]) < 1e-9);
            CHECK(std::abs(cc[i] - cc_ref[i]) < 1e-12);
            CHECK(cc[i] >= 0.0);
            CHECK(cc[i] <= 1.0);
            CHECK(std::abs(pr[i] - pr_ref[i]) < 1e-8);
            CHECK(std::abs(pr[i] - pr_exact[i]) < 1e-8);
            CHECK(std::abs(h.hub[i] - h_ref.hub[i]) < 1e-8);
            CHECK(std::abs(h.authority[i] - h_ref.authority[i]) < 1e-8);
            pr_sum += pr[i];
            hub_sq += h.hub[i] * h.hub[i];
            auth_sq += h.authority[i] * h.authority[i];
        }
        CHECK(pr_sum == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(hub_sq == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(auth_sq == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("measures are bit-identical across calls") {
    std::mt19937_64 rng(5);
    const Graph g = oracle::random_graph(rng, 40, 0.1, true).build();
    const auto a = compute_all_measures(g);
    const auto b = compute_all_measures(g);
    for (std::size_t m = 0; m < a.size(); ++m)
        CHECK(a[m].values == b[m].values);
}
