#include <doctest.h>

#include "netlabel/measures.hpp"
#include "netlabel/netgen.hpp"
#include "netlabel/stats.hpp"

using namespace netlabel;

namespace {

GenSpec planted(std::size_t n, std::size_t k, double p_in, double p_out, std::uint64_t seed) {
    GenSpec s;
    s.kind = GenKind::planted_partition;
    s.n = n;
    s.blocks = k;
    s.p_in = p_in;
    s.p_out = p_out;
    s.seed = seed;
    return s;
}

GenSpec small_world(std::size_t n, std::size_t degree, double beta, std::size_t k, std::uint64_t seed) {
    GenSpec s;
    s.kind = GenKind::small_world;
    s.n = n;
    s.ring_degree = degree;
    s.beta = beta;
    s.blocks = k;
    s.seed = seed;
    return s;
}

GenSpec sparse(std::size_t n, double p, std::size_t k, std::uint64_t seed) {
    GenSpec s;
    s.kind = GenKind::sparse_random;
    s.n = n;
    s.p = p;
    s.blocks = k;
    s.seed = seed;
    return s;
}

} // namespace

TEST_CASE("planted partition with extreme probabilities gives two cliques") {
    const auto g = generate(planted(40, 2, 1.0, 0.0, 1));
    CHECK(g.graph.node_count() == 40);
    CHECK(g.graph.edge_count() == 2 * (20 * 19 / 2));
    const auto comp = connected_components(g.graph);
    CHECK(graph_stats(g.graph).component_count == 2);
    for (NodeIndex v = 0; v < 40; ++v)
        for (NodeIndex w = 0; w < 40; ++w)
            CHECK((comp[v] == comp[w]) == (g.truth.at(v) == g.truth.at(w)));
}

TEST_CASE("ring lattice clustering") {
    const auto g = generate(small_world(20, 4, 0.0, 2, 1));
    CHECK(g.graph.edge_count() == 40);
    for (double c : local_clustering(g.graph))
        CHECK(c == doctest::Approx(0.5));
}

TEST_CASE("small world labels are contiguous arcs") {
    const auto g = generate(small_world(30, 4, 0.3, 3, 2));
    CHECK(g.truth.label_count() == 3);
    LabelIndex prev = 0;
    for (NodeIndex v = 0; v < 30; ++v) {
        CHECK(g.truth.at(v) >= prev);
        prev = g.truth.at(v);
    }
    CHECK(g.truth.known_count() == 30);
}

TEST_CASE("generators are deterministic per seed") {
    for (const GenSpec &s : {sparse(100, 0.005, 4, 9), planted(50, 3, 0.3, 0.02, 9), small_world(50, 4, 0.2, 2, 9)}) {
        const auto a = generate(s);
        const auto b = generate(s);
        CHECK(a.graph == b.graph);
        CHECK(a.truth == b.truth);
    }
    CHECK(!(generate(sparse(100, 0.05, 4, 1)).graph == generate(sparse(100, 0.05, 4, 2)).graph));
}

TEST_CASE("planted partition is assortative") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        const auto g = generate(planted(200, 2, 0.3, 0.01, seed));
        std::size_t intra = 0;
        for (const Edge &e : g.graph.edges())
            intra += g.truth.at(e.src) == g.truth.at(e.dst);
        CHECK(2 * intra > g.graph.edge_count());
    }
}

TEST_CASE("ring lattice clusters more than a random graph with the same edge count") {
    const auto ring = generate(small_world(200, 6, 0.0, 2, 3));
    const double p = static_cast<double>(ring.graph.edge_count()) / (200.0 * 199.0 / 2.0);
    const auto rnd = generate(sparse(200, p, 2, 3));
    CHECK(graph_stats(ring.graph).avg_clustering > graph_stats(rnd.graph).avg_clustering);
}

TEST_CASE("sparse random graph labels and isolated nodes") {
    const auto g = generate(sparse(500, 0.0015, 16, 4));
    CHECK(g.graph.node_count() == 500);
    CHECK(g.truth.known_count() == 500);
    CHECK(g.truth.label_count() <= 16);
    CHECK(g.truth.label_count() >= 14);
    CHECK(graph_stats(g.graph).component_count > 100);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS(generate(planted(10, 2, 1.5, 0.0, 1)));
    CHECK_THROWS(generate(planted(10, 2, 0.5, -0.1, 1)));
    CHECK_THROWS(generate(sparse(10, 2.0, 2, 1)));
    CHECK_THROWS(generate(small_world(10, 4, 1.2, 2, 1)));
    CHECK_THROWS(generate(sparse(0, 0.1, 2, 1)));
    CHECK(parse_gen_kind("small_world") == GenKind::small_world);
    CHECK(!parse_gen_kind("lattice"));
}
