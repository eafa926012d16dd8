#include <doctest.h>

#include <numeric>
#include <sstream>

#include "netlabel/eval.hpp"
#include "netlabel/features.hpp"
#include "netlabel/ica.hpp"
#include "netlabel/io.hpp"
#include "netlabel/netgen.hpp"
#include "netlabel/selection.hpp"

using namespace netlabel;

namespace {

Graph parse(const std::string &text, bool directed) {
    std::istringstream in(text);
    return load_edge_list(in, directed);
}

Labeling labels_for(const Graph &g, const std::string &text) {
    std::istringstream in(text);
    return load_labels(in, g);
}

/// Labeling over {A, B} from a per-node string: 'A', 'B' or '.' for unknown.
Labeling ab(const std::string &pattern) {
    std::vector<LabelIndex> a;
    for (char c : pattern)
        a.push_back(c == '.' ? kUnlabelled : c - 'A');
    return Labeling({"A", "B"}, a);
}

TrainingSet rows(std::initializer_list<std::pair<std::vector<double>, LabelIndex>> data) {
    TrainingSet t;
    t.feature_count = data.begin()->first.size();
    for (const auto &[x, y] : data)
        t.add(x, y);
    return t;
}

} // namespace

TEST_CASE("feature layout and examples") {
    CHECK(feature_count(2) == 15);
    CHECK(feature_count(16) == 71);

    // v -> x (A), v -> y (A), v -> z (unknown); w -> v
    const Graph g = parse("v x\nv y\nw v\nv z", true);
    const auto table = compute_all_measures(g);
    Labeling cur = ab(std::string(g.node_count(), '.'));
    cur.assign(g.index_of("x"), 0);
    cur.assign(g.index_of("y"), 0);
    const auto f = extract_features(g, cur, g.index_of("v"), table);
    REQUIRE(f.size() == 15);
    // in block: w is unknown
    CHECK(f[0] == 0.0);
    CHECK(f[1] == 0.0);
    CHECK(f[2] == 0.0);
    CHECK(f[3] == 0.0);
    // out block: two A, one unknown excluded from the denominator
    CHECK(f[4] == 2.0);
    CHECK(f[5] == 0.0);
    CHECK(f[6] == 1.0);
    CHECK(f[7] == 0.0);
    for (std::size_t m = 0; m < 7; ++m)
        CHECK(f[8 + m] == table[m].values[g.index_of("v")]);

    cur.assign(g.index_of("x"), kUnlabelled);
    const auto f1 = extract_features(g, cur, g.index_of("v"), table);
    CHECK(f1[4] == 1.0);
    CHECK(f1[6] == 1.0);
}

TEST_CASE("isolated node has zero relational features") {
    std::istringstream edges("a b\n"), nodes("q\n");
    const Graph g = load_edge_list(edges, false, &nodes);
    const auto table = compute_all_measures(g);
    const auto f = extract_features(g, ab("AB."), g.index_of("q"), table);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(f[i] == 0.0);
    for (std::size_t m = 0; m < 7; ++m)
        CHECK(f[8 + m] == table[m].values[g.index_of("q")]);
}

TEST_CASE("single-class training set always predicts that class") {
    const auto data = rows({{{0.0, 1.0}, 1}, {{5.0, 2.0}, 1}, {{-3.0, 9.0}, 1}});
    for (ClassifierKind kind : {ClassifierKind::tree_ensemble, ClassifierKind::naive_bayes}) {
        Rng rng(1);
        const auto clf = LocalClassifier::train(data, 3, {kind, {}, 1e-9}, rng);
        for (double x : {-100.0, 0.0, 3.3, 1e6}) {
            const std::vector<double> in{x, -x};
            CHECK(clf.predict(in) == 1);
            const auto p = clf.predict_proba(in);
            CHECK(p[0] == 0.0);
            CHECK(p[2] == 0.0);
            CHECK(p[1] == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("naive Bayes separates a linearly separated set perfectly") {
    TrainingSet data;
    data.feature_count = 2;
    for (int i = 0; i < 20; ++i) {
        const double t = i * 0.1;
        data.add(std::vector<double>{t, 1.0 + t}, 0);
        data.add(std::vector<double>{5.0 + t, -1.0 - t}, 1);
    }
    Rng rng(0);
    const auto clf = LocalClassifier::train(data, 2, {ClassifierKind::naive_bayes, {}, 1e-9}, rng);
    for (std::size_t i = 0; i < data.rows(); ++i)
        CHECK(clf.predict(data.row(i)) == data.labels[i]);
}

TEST_CASE("classifier outputs are distributions and training is deterministic") {
    std::mt19937_64 gen(8);
    TrainingSet data;
    data.feature_count = 5;
    for (int i = 0; i < 60; ++i) {
        std::vector<double> x(5);
        for (double &v : x)
            v = std::uniform_real_distribution<double>(-1, 1)(gen);
        data.add(x, static_cast<LabelIndex>((x[0] + x[1] > 0) + (x[2] > 0.5)));
    }
    for (ClassifierKind kind : {ClassifierKind::tree_ensemble, ClassifierKind::naive_bayes}) {
        Rng a(77), b(77);
        const auto c1 = LocalClassifier::train(data, 3, {kind, {}, 1e-9}, a);
        const auto c2 = LocalClassifier::train(data, 3, {kind, {}, 1e-9}, b);
        CHECK(c1 == c2);
        CHECK(c1.kind() == kind);
        for (std::size_t i = 0; i < data.rows(); ++i) {
            const auto p = c1.predict_proba(data.row(i));
            CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
        }
    }
    Rng rng(1);
    CHECK_THROWS_AS(LocalClassifier::train(TrainingSet{5, {}, {}}, 2, {}, rng), ClassifierError);
}

TEST_CASE("random forest fits a noise-free training set") {
    TrainingSet data;
    data.feature_count = 3;
    for (int i = 0; i < 40; ++i) {
        const double x = i;
        data.add(std::vector<double>{x, 40 - x, static_cast<double>(i % 3)}, i < 20 ? 0 : 1);
    }
    Rng rng(3);
    const auto clf = LocalClassifier::train(data, 2, {}, rng);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < data.rows(); ++i)
        correct += clf.predict(data.row(i)) == data.labels[i];
    CHECK(correct >= 38);
}

TEST_CASE("ica examples") {
    const Graph g = parse("a b\nb c\nc d\nd a", false);
    Rng rng(1);
    const Labeling full = ab("ABAB");
    const IcaResult same = ica_run(g, full, IcaConfig{}, rng);
    CHECK(same.labels == full);
    CHECK(same.iterations == 0);

    const IcaResult one = ica_run(g, ab("B..."), IcaConfig{}, rng);
    CHECK(one.labels == ab("BBBB"));

    CHECK_THROWS_AS(ica_run(g, ab("...."), IcaConfig{}, rng), InferenceError);
}

TEST_CASE("ica on a planted 2-block graph with half the labels") {
    const auto gen = generate({GenKind::planted_partition, 40, 2, 0.5, 0.02, 4, 0.0, 0.0, 11});
    Rng sel(5);
    const SeedSet seeds = select_random(gen.graph, 20, sel);
    const Labeling seed = gen.truth.restricted_to(seeds.nodes);
    IcaConfig cfg;
    cfg.classifier.kind = ClassifierKind::naive_bayes;
    Rng rng(6);
    const IcaResult r = ica_run(gen.graph, seed, cfg, rng);
    CHECK(classification_error(r.labels, gen.truth, seed.unknown()) <= 0.1);
}

TEST_CASE("ica invariants on random problems") {
    std::mt19937_64 gen(4);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = generate({GenKind::planted_partition, 20 + gen() % 30, 2 + gen() % 3, 0.4, 0.05, 4, 0.0, 0.0,
                                 gen()});
        Rng sel(gen());
        const SeedSet seeds = select_random(g.graph, 1 + gen() % (g.graph.node_count() - 1), sel);
        const Labeling seed = g.truth.restricted_to(seeds.nodes);
        IcaConfig cfg;
        cfg.max_iter = 1 + static_cast<int>(gen() % 10);
        cfg.classifier.kind = trial % 2 ? ClassifierKind::naive_bayes : ClassifierKind::tree_ensemble;
        cfg.classifier.forest.trees = 10;
        const std::uint64_t s = gen();
        Rng r1(s), r2(s);
        const IcaResult a = ica_run(g.graph, seed, cfg, r1);
        const IcaResult b = ica_run(g.graph, seed, cfg, r2);
        CHECK(a.labels == b.labels);
        CHECK(a.iterations <= cfg.max_iter);
        for (NodeIndex v = 0; v < g.graph.node_count(); ++v) {
            CHECK(a.labels.is_known(v));
            if (seed.is_known(v))
                CHECK(a.labels.at(v) == seed.at(v));
        }
    }
}

TEST_CASE("naive Bayes reaches full training accuracy on neighbour-separable seeds") {
    // two stars whose leaves are all labelled like their hub
    const Graph g = parse("h1 a1\nh1 a2\nh1 a3\nh2 b1\nh2 b2\nh2 b3\na1 a2\nb1 b2", false);
    const Labeling truth = labels_for(g, "h1,A\na1,A\na2,A\na3,A\nh2,B\nb1,B\nb2,B\nb3,B\n");
    const auto table = compute_all_measures(g);
    TrainingSet data;
    data.feature_count = feature_count(2);
    for (NodeIndex v : truth.known())
        data.add(extract_features(g, truth, v, table), truth.at(v));
    Rng rng(0);
    const auto clf = LocalClassifier::train(data, 2, {ClassifierKind::naive_bayes, {}, 1e-9}, rng);
    for (std::size_t i = 0; i < data.rows(); ++i)
        CHECK(clf.predict(data.row(i)) == data.labels[i]);
}
