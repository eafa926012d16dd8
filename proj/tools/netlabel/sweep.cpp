#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <thread>

#include "results_csv.hpp"

namespace netlabel::app {

namespace {

using nlohmann::json;

void check_keys(const json &obj, std::initializer_list<std::string_view> allowed, const std::string &where) {
    if (!obj.is_object())
        throw ConfigError(where + " must be an object");
    for (const auto &[key, value] : obj.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ConfigError("unknown key '" + key + "' in " + where);
}

template <class T>
T get_or(const json &obj, const char *key, T fallback) {
    if (!obj.contains(key))
        return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception &e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &p) {
    if (p.empty())
        return {};
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
}

GenSpec parse_gen_spec(const json &g) {
    check_keys(g, {"kind", "n", "blocks", "p_in", "p_out", "ring_degree", "beta", "p", "seed"}, "generate");
    GenSpec spec;
    const auto kind = parse_gen_kind(get_or<std::string>(g, "kind", ""));
    if (!kind)
        throw ConfigError("generate.kind must be planted_partition, small_world or sparse_random");
    spec.kind = *kind;
    spec.n = get_or<std::size_t>(g, "n", 0);
    spec.blocks = get_or<std::size_t>(g, "blocks", spec.blocks);
    spec.p_in = get_or<double>(g, "p_in", spec.p_in);
    spec.p_out = get_or<double>(g, "p_out", spec.p_out);
    spec.ring_degree = get_or<std::size_t>(g, "ring_degree", spec.ring_degree);
    spec.beta = get_or<double>(g, "beta", spec.beta);
    spec.p = get_or<double>(g, "p", spec.p);
    spec.seed = get_or<std::uint64_t>(g, "seed", spec.seed);
    return spec;
}

void validate_name(const std::string &name) {
    if (name.empty())
        throw ConfigError("every dataset needs a name");
    if (name.find_first_of(",/\\\n\r") != std::string::npos)
        throw ConfigError("dataset name '" + name + "' may not contain commas or path separators");
}

} // namespace

void write_beliefs(const std::filesystem::path &path, const Dataset &ds, const CellOutcome &out) {
    std::ofstream f(path);
    f << "node_id,label,belief\n";
    for (NodeIndex v = 0; v < out.beliefs.size(); ++v)
        for (std::size_t l = 0; l < out.beliefs[v].size(); ++l)
            f << ds.graph.id(v) << ',' << ds.truth.label_name(static_cast<LabelIndex>(l)) << ','
              << format_double(out.beliefs[v][l]) << '\n';
}

std::string belief_file_name(const SweepResult &r) {
    std::string s = r.strategy.to_string();
    std::replace(s.begin(), s.end(), ':', '-');
    return r.dataset + "_" + std::string(to_string(r.algorithm)) + "_" + s + "_" + format_double(r.fraction) + "_" +
           std::to_string(r.run_index) + ".csv";
}

SweepConfig parse_sweep_config(const json &doc, const std::filesystem::path &base_dir) {
    check_keys(doc,
               {"datasets", "algorithms", "strategies", "fractions", "random_repeats", "master_seed", "classifier",
                "forest", "ica", "lbp", "kl_smoothing", "output"},
               "sweep config");
    SweepConfig cfg;

    if (!doc.contains("datasets") || !doc["datasets"].is_array() || doc["datasets"].empty())
        throw ConfigError("sweep config needs a non-empty 'datasets' array");
    std::set<std::string> names;
    for (const auto &d : doc["datasets"]) {
        check_keys(d, {"name", "edges", "labels", "nodes", "directed", "generate"}, "dataset entry");
        DatasetSource src;
        src.name = get_or<std::string>(d, "name", "");
        validate_name(src.name);
        if (!names.insert(src.name).second)
            throw ConfigError("duplicate dataset name '" + src.name + "'");
        if (d.contains("generate")) {
            src.generated = parse_gen_spec(d["generate"]);
        } else {
            src.edges = resolve(base_dir, get_or<std::string>(d, "edges", ""));
            src.labels = resolve(base_dir, get_or<std::string>(d, "labels", ""));
            src.nodes = resolve(base_dir, get_or<std::string>(d, "nodes", ""));
            src.directed = get_or<bool>(d, "directed", false);
            if (src.edges.empty() || src.labels.empty())
                throw ConfigError("dataset '" + src.name + "' needs 'edges' and 'labels' (or 'generate')");
        }
        cfg.datasets.push_back(std::move(src));
    }

    if (doc.contains("algorithms")) {
        cfg.algorithms.clear();
        for (const auto &a : doc["algorithms"]) {
            const auto alg = parse_algorithm(a.get<std::string>());
            if (!alg)
                throw ConfigError("unknown algorithm '" + a.get<std::string>() + "'");
            cfg.algorithms.push_back(*alg);
        }
    }
    std::sort(cfg.algorithms.begin(), cfg.algorithms.end());
    cfg.algorithms.erase(std::unique(cfg.algorithms.begin(), cfg.algorithms.end()), cfg.algorithms.end());
    if (cfg.algorithms.empty())
        throw ConfigError("'algorithms' may not be empty");

    if (doc.contains("strategies")) {
        cfg.strategies.clear();
        for (const auto &s : doc["strategies"]) {
            const auto text = s.get<std::string>();
            if (text == "all") {
                const auto all = enumerate_strategies();
                cfg.strategies.insert(cfg.strategies.end(), all.begin(), all.end());
                continue;
            }
            try {
                cfg.strategies.push_back(Strategy::parse(text));
            } catch (const StrategyError &e) {
                throw ConfigError(e.what());
            }
        }
    }
    std::sort(cfg.strategies.begin(), cfg.strategies.end(),
              [](const Strategy &a, const Strategy &b) { return canonical_index(a) < canonical_index(b); });
    cfg.strategies.erase(std::unique(cfg.strategies.begin(), cfg.strategies.end()), cfg.strategies.end());
    if (cfg.strategies.empty())
        throw ConfigError("'strategies' may not be empty");

    if (doc.contains("fractions"))
        cfg.fractions = get_or<std::vector<double>>(doc, "fractions", {});
    std::sort(cfg.fractions.begin(), cfg.fractions.end());
    cfg.fractions.erase(std::unique(cfg.fractions.begin(), cfg.fractions.end()), cfg.fractions.end());
    if (cfg.fractions.empty())
        throw ConfigError("'fractions' may not be empty");
    for (double f : cfg.fractions)
        if (!(f > 0.0 && f < 1.0))
            throw ConfigError("fractions must lie strictly between 0 and 1");

    const auto repeats = get_or<long long>(doc, "random_repeats", 14);
    if (repeats < 1)
        throw ConfigError("'random_repeats' must be at least 1");
    cfg.random_repeats = static_cast<std::size_t>(repeats);
    cfg.master_seed = get_or<std::uint64_t>(doc, "master_seed", cfg.master_seed);

    if (doc.contains("classifier")) {
        const auto kind = parse_classifier_kind(get_or<std::string>(doc, "classifier", ""));
        if (!kind)
            throw ConfigError("'classifier' must be tree_ensemble or naive_bayes");
        cfg.run.ica.classifier.kind = *kind;
    }
    if (doc.contains("forest")) {
        const auto &f = doc["forest"];
        check_keys(f, {"trees", "min_leaf", "max_features"}, "forest");
        auto &fp = cfg.run.ica.classifier.forest;
        fp.trees = get_or<int>(f, "trees", fp.trees);
        fp.min_leaf = get_or<std::size_t>(f, "min_leaf", fp.min_leaf);
        fp.max_features = get_or<std::size_t>(f, "max_features", fp.max_features);
        if (fp.trees < 1 || fp.min_leaf < 1)
            throw ConfigError("forest needs trees >= 1 and min_leaf >= 1");
    }
    if (doc.contains("ica")) {
        check_keys(doc["ica"], {"max_iter"}, "ica");
        cfg.run.ica.max_iter = get_or<int>(doc["ica"], "max_iter", cfg.run.ica.max_iter);
        if (cfg.run.ica.max_iter < 0)
            throw ConfigError("ica.max_iter must be non-negative");
    }
    if (doc.contains("lbp")) {
        check_keys(doc["lbp"], {"max_iter", "rel_tol", "laplace"}, "lbp");
        cfg.run.lbp.max_iter = get_or<int>(doc["lbp"], "max_iter", cfg.run.lbp.max_iter);
        cfg.run.lbp.rel_tol = get_or<double>(doc["lbp"], "rel_tol", cfg.run.lbp.rel_tol);
        cfg.run.laplace = get_or<double>(doc["lbp"], "laplace", cfg.run.laplace);
        if (cfg.run.lbp.max_iter < 0 || !(cfg.run.lbp.rel_tol >= 0.0) || !(cfg.run.laplace > 0.0))
            throw ConfigError("lbp needs max_iter >= 0, rel_tol >= 0 and laplace > 0");
    }
    cfg.run.kl_smoothing = get_or<double>(doc, "kl_smoothing", cfg.run.kl_smoothing);
    if (doc.contains("output"))
        cfg.output_dir = resolve(base_dir, get_or<std::string>(doc, "output", ""));
    return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_sweep_config(doc, path.parent_path());
}

std::size_t expected_rows_per_dataset(const SweepConfig &cfg) {
    std::size_t per_fraction = 0;
    for (const auto &s : cfg.strategies)
        per_fraction += s.is_random() ? cfg.random_repeats : 1;
    return cfg.algorithms.size() * cfg.fractions.size() * per_fraction;
}

SweepOutput run_sweep(const SweepConfig &cfg, std::size_t jobs, std::ostream *progress) {
    SweepOutput out;
    std::vector<Dataset> loaded;
    for (const auto &src : cfg.datasets) {
        try {
            loaded.push_back(load_dataset(src));
            const auto &ds = loaded.back();
            out.datasets.push_back(
                DatasetSummary{ds.name, ds.graph.directed(), ds.truth.label_count(), graph_stats(ds.graph, ds.truth)});
        } catch (const std::exception &e) {
            out.failures.push_back("dataset '" + src.name + "': " + e.what());
            if (progress)
                *progress << "error: dataset '" << src.name << "': " << e.what() << '\n';
        }
    }

    struct Cell {
        const Dataset *ds;
        CellSpec spec;
    };
    std::vector<Cell> cells;
    for (const auto &ds : loaded)
        for (Algorithm alg : cfg.algorithms)
            for (const auto &strategy : cfg.strategies)
                for (double f : cfg.fractions) {
                    const std::size_t runs = strategy.is_random() ? cfg.random_repeats : 1;
                    for (std::size_t run = 0; run < runs; ++run)
                        cells.push_back(Cell{&ds, CellSpec{alg, strategy, f, run,
                                                           derive_cell_seed(cfg.master_seed, ds.name, alg, strategy,
                                                                            f, run)}});
                }

    if (!cfg.debug_beliefs_dir.empty())
        std::filesystem::create_directories(cfg.debug_beliefs_dir);

    std::vector<std::optional<SweepResult>> slots(cells.size());
    std::vector<std::string> cell_errors(cells.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex log_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size())
                return;
            const auto &cell = cells[i];
            try {
                auto outcome = run_cell(*cell.ds, cell.spec, cfg.run);
                if (!cfg.debug_beliefs_dir.empty() && !outcome.beliefs.empty())
                    write_beliefs(cfg.debug_beliefs_dir / belief_file_name(outcome.result), *cell.ds, outcome);
                slots[i] = std::move(outcome.result);
            } catch (const std::exception &e) {
                cell_errors[i] = cell.ds->name + " " + std::string(to_string(cell.spec.algorithm)) + " " +
                                 cell.spec.strategy.to_string() + " " + format_double(cell.spec.fraction) + ": " +
                                 e.what();
            }
            const auto finished = done.fetch_add(1) + 1;
            if (progress && (finished % 100 == 0 || finished == cells.size())) {
                std::lock_guard lock(log_mutex);
                *progress << "progress: " << finished << "/" << cells.size() << " cells\n";
            }
        }
    };

    jobs = std::max<std::size_t>(1, std::min(jobs, std::max<std::size_t>(cells.size(), 1)));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
    }

    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (slots[i])
            out.rows.push_back(std::move(*slots[i]));
        else
            out.failures.push_back("cell " + cell_errors[i]);
    }
    return out;
}

void write_results_csv(const std::vector<SweepResult> &rows, std::ostream &out) {
    out << kResultHeader << '\n';
    for (const auto &r : rows)
        out << format_result_row(r) << '\n';
}

void write_dataset_summary_csv(const std::vector<DatasetSummary> &datasets, std::ostream &out) {
    out << "dataset,nodes,edges,directed,classes,avg_degree,avg_path_length,components,label_modularity,density,"
           "diameter,avg_clustering\n";
    for (const auto &d : datasets) {
        const auto &s = d.stats;
        out << d.name << ',' << s.node_count << ',' << s.edge_count << ',' << (d.directed ? "yes" : "no") << ','
            << d.label_count << ',' << format_double(s.avg_degree) << ',' << format_double(s.avg_path_length) << ','
            << s.component_count << ',' << (s.label_modularity ? format_double(*s.label_modularity) : "") << ','
            << format_double(s.density) << ',' << s.diameter << ',' << format_double(s.avg_clustering) << '\n';
    }
}

std::vector<DatasetSummary> read_dataset_summary_csv(std::istream &in) {
    std::vector<DatasetSummary> out;
    std::string line;
    if (!std::getline(in, line))
        return out;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            f.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos)
                break;
            start = comma + 1;
        }
        if (f.size() != 12)
            throw SchemaError("dataset summary row has " + std::to_string(f.size()) + " fields, expected 12");
        DatasetSummary d;
        d.name = f[0];
        d.stats.node_count = std::stoul(f[1]);
        d.stats.edge_count = std::stoul(f[2]);
        d.directed = f[3] == "yes";
        d.label_count = std::stoul(f[4]);
        d.stats.avg_degree = std::stod(f[5]);
        d.stats.avg_path_length = std::stod(f[6]);
        d.stats.component_count = std::stoul(f[7]);
        if (!f[8].empty())
            d.stats.label_modularity = std::stod(f[8]);
        d.stats.density = std::stod(f[9]);
        d.stats.diameter = std::stoul(f[10]);
        d.stats.avg_clustering = std::stod(f[11]);
        out.push_back(std::move(d));
    }
    return out;
}

} // namespace netlabel::app
