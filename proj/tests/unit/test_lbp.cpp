#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>

#include "netlabel/ica.hpp"
#include "netlabel/io.hpp"
#include "netlabel/lbp.hpp"
#include "netlabel/netgen.hpp"
#include "oracles.hpp"

using namespace netlabel;

namespace {

Graph parse(const std::string &text, bool directed) {
    std::istringstream in(text);
    return load_edge_list(in, directed);
}

Labeling seed_from(const std::vector<int> &known, std::size_t labels) {
    std::vector<Label> names;
    for (std::size_t l = 0; l < labels; ++l)
        names.push_back(std::string(1, static_cast<char>('A' + l)));
    return Labeling(names, std::vector<LabelIndex>(known.begin(), known.end()));
}

double sum(const std::vector<double> &v) {
    return std::accumulate(v.begin(), v.end(), 0.0);
}

} // namespace

TEST_CASE("class prior") {
    const auto p = class_prior(seed_from({0, 0, 1, -1}, 3), 1.0);
    CHECK(p[0] == doctest::Approx(3.0 / 6));
    CHECK(p[1] == doctest::Approx(2.0 / 6));
    CHECK(p[2] == doctest::Approx(1.0 / 6));
}

TEST_CASE("potentials with no labelled-labelled edge are uniform") {
    const Graph g = parse("a b\nb c", false);
    const Potentials pot = estimate_potentials(g, seed_from({0, -1, 1}, 2));
    for (double v : pot.pairwise)
        CHECK(v == doctest::Approx(0.5));
}

TEST_CASE("potentials from a same-label toy seed") {
    // four A-A edges among known nodes, one unknown node u
    const Graph g = parse("a b\nb c\nc d\nd a\nd u", false);
    // ids sorted: a b c d u
    const Potentials pot = estimate_potentials(g, seed_from({0, 0, 0, 0, -1}, 2), 1.0);
    CHECK(pot.psi(0, 0) == doctest::Approx(5.0 / 6));
    CHECK(pot.psi(0, 1) == doctest::Approx(1.0 / (4 + 2 * 1.0)));
    CHECK(pot.psi(1, 0) == doctest::Approx(0.5));
    CHECK(pot.psi(1, 1) == doctest::Approx(0.5));
    for (double v : pot.pairwise)
        CHECK(v > 0.0);
    // u has one A neighbour: prior (5/6, 1/6) times psi(A, .)
    const auto &phi = pot.node[4];
    const double a = 5.0 / 6 * 5.0 / 6, b = 1.0 / 6 * 1.0 / 6;
    CHECK(phi[0] == doctest::Approx(a / (a + b)));
    CHECK(sum(phi) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pot.node[0].empty());
}

TEST_CASE("cross-label edges are symmetrized") {
    const Graph g = parse("a b\na c\nc x", true);
    const Potentials pot = estimate_potentials(g, seed_from({0, 1, 1, -1}, 2), 1.0);
    CHECK(pot.psi(0, 1) == doctest::Approx(3.0 / 4)); // (a,b),(a,c) -> 2 + 1
    CHECK(pot.psi(1, 0) == doctest::Approx(3.0 / 4));
}

TEST_CASE("unlabelled node without labelled neighbours gets the prior") {
    const Graph g = parse("a b\nc d", false);
    const Potentials pot = estimate_potentials(g, seed_from({0, 1, -1, -1}, 2));
    CHECK(pot.node[2] == pot.prior);
}

TEST_CASE("lbp examples") {
    const Graph g = parse("a b\nb c", false);
    const Labeling full = seed_from({0, 1, 0}, 2);
    const LbpResult same = lbp_run(g, full);
    CHECK(same.labels == full);
    CHECK(same.messages.pairs.empty());
    CHECK_THROWS_AS(lbp_run(g, seed_from({-1, -1, -1}, 2)), InferenceError);

    // isolated unknown node follows the seed class prior
    std::istringstream edges("a b\n"), nodes("z\n");
    const Graph iso = load_edge_list(edges, false, &nodes);
    const LbpResult r = lbp_run(iso, seed_from({1, 1, -1}, 2));
    CHECK(r.labels.at(2) == 1);
    const auto prior = class_prior(seed_from({1, 1, -1}, 2), 1.0);
    CHECK(r.beliefs[2][0] == doctest::Approx(prior[0]));
    CHECK(r.beliefs[2][1] == doctest::Approx(prior[1]));
}

TEST_CASE("chain u1 - k - u2 with forced potentials") {
    const Graph g = parse("k u1\nk u2", false);
    const Labeling seed = seed_from({0, -1, -1}, 2); // ids: k u1 u2
    const Potentials pot = absorb_evidence(g, seed, {0.9, 0.1, 0.1, 0.9}, {0.5, 0.5});
    const LbpResult r = lbp_run(g, seed, pot);
    for (NodeIndex u : {1u, 2u}) {
        CHECK(r.labels.at(u) == 0);
        CHECK(r.beliefs[u][0] == doctest::Approx(0.9));
    }
}

TEST_CASE("tree beliefs match exact enumeration") {
    std::mt19937_64 gen(99);
    LbpConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.max_iter = 200;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + gen() % 9;
        const std::size_t labels = 2 + gen() % 2;
        const auto raw = oracle::random_tree(gen, n);
        const Graph g = raw.build();
        std::vector<int> known(n, -1);
        known[gen() % n] = static_cast<int>(gen() % labels);
        for (std::size_t v = 0; v < n; ++v)
            if (gen() % 4 == 0)
                known[v] = static_cast<int>(gen() % labels);
        std::vector<double> psi(labels * labels);
        for (std::size_t a = 0; a < labels; ++a)
            for (std::size_t b = a; b < labels; ++b)
                psi[a * labels + b] = psi[b * labels + a] = std::uniform_real_distribution<double>(0.05, 1.0)(gen);
        std::vector<double> prior(labels);
        for (double &p : prior)
            p = std::uniform_real_distribution<double>(0.1, 1.0)(gen);
        const double z = sum(prior);
        for (double &p : prior)
            p /= z;

        const Labeling seed = seed_from(known, labels);
        const LbpResult r = lbp_run(g, seed, absorb_evidence(g, seed, psi, prior), cfg);
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const Edge &e : g.edges())
            edges.emplace_back(e.src, e.dst);
        const auto exact = oracle::mrf_marginals(n, edges, known, labels, psi, prior);
        CAPTURE(trial);
        CHECK(r.converged);
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t l = 0; l < exact[v].size(); ++l)
                CHECK(std::abs(r.beliefs[v][l] - exact[v][l]) < 1e-6);
    }
}

TEST_CASE("messages and beliefs stay normalized every round") {
    const auto gen = generate({GenKind::planted_partition, 60, 3, 0.2, 0.05, 4, 0.0, 0.0, 3});
    std::vector<NodeIndex> some;
    for (NodeIndex v = 0; v < gen.graph.node_count(); v += 4)
        some.push_back(v);
    const Labeling seed = gen.truth.restricted_to(some);
    LbpConfig cfg;
    int rounds = 0;
    cfg.on_round = [&](int round, const MessageState &m) {
        CHECK(round == rounds++);
        for (std::size_t i = 0; i < m.pairs.size(); ++i) {
            const auto msg = m.message(i);
            CHECK(std::accumulate(msg.begin(), msg.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(!seed.is_known(m.pairs[i].first));
            CHECK(!seed.is_known(m.pairs[i].second));
            CHECK(gen.graph.neighbours(m.pairs[i].first, NeighbourMode::all).size() > 0);
        }
    };
    const LbpResult r = lbp_run(gen.graph, seed, cfg);
    CHECK(rounds == r.iterations + 1);
    CHECK(r.iterations <= 50);
    for (NodeIndex v = 0; v < gen.graph.node_count(); ++v) {
        if (seed.is_known(v)) {
            CHECK(r.labels.at(v) == seed.at(v));
            CHECK(r.beliefs[v].empty());
        } else {
            CHECK(sum(r.beliefs[v]) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    // every ordered adjacent pair of unknown nodes carries one message
    std::size_t pairs = 0;
    for (const Edge &e : gen.graph.edges())
        pairs += (!seed.is_known(e.src) && !seed.is_known(e.dst)) ? 2 : 0;
    CHECK(r.messages.pairs.size() == pairs);
}

TEST_CASE("no propagation into components without evidence") {
    // component {a,b} holds the evidence; {x,y,z} has none
    const Graph g = parse("a b\nx y\ny z", false);
    const Labeling seed = seed_from({1, -1, -1, -1, -1}, 3);
    const LbpResult r = lbp_run(g, seed);
    const auto prior = class_prior(seed, 1.0);
    for (NodeIndex v : {2u, 3u, 4u}) {
        for (std::size_t l = 0; l < 3; ++l)
            CHECK(r.beliefs[v][l] == doctest::Approx(prior[l]).epsilon(1e-12));
        CHECK(r.labels.at(v) == 1);
    }
}

TEST_CASE("argmax ties go to the lowest label") {
    const Graph g = parse("a b", false);
    const Labeling seed = seed_from({-1, 0}, 2);
    const Potentials pot = absorb_evidence(g, seed, {0.5, 0.5, 0.5, 0.5}, {0.5, 0.5});
    CHECK(lbp_run(g, seed, pot).labels.at(0) == 0);
}

TEST_CASE("lbp is deterministic") {
    const auto gen = generate({GenKind::small_world, 80, 4, 0.0, 0.0, 6, 0.2, 0.0, 8});
    std::vector<NodeIndex> some;
    for (NodeIndex v = 0; v < gen.graph.node_count(); v += 5)
        some.push_back(v);
    const Labeling seed = gen.truth.restricted_to(some);
    const LbpResult a = lbp_run(gen.graph, seed);
    const LbpResult b = lbp_run(gen.graph, seed);
    CHECK(a.labels == b.labels);
    CHECK(a.beliefs == b.beliefs);
    CHECK(a.iterations == b.iterations);
}
