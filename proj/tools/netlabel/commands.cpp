#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "netlabel/io.hpp"
#include "netlabel/selection.hpp"
#include "netlabel/stats.hpp"
#include "report.hpp"
#include "results_csv.hpp"
#include "sweep.hpp"

namespace netlabel::app {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct DatasetArgs {
    std::string edges;
    std::string labels;
    std::string nodes;
    std::string name;
    bool directed = false;

    void attach(CLI::App &cmd, bool labels_required) {
        cmd.add_option("--dataset", edges, "edge-list file")->required()->check(CLI::ExistingFile);
        auto *l = cmd.add_option("--labels", labels, "node_id,label file");
        if (labels_required)
            l->required();
        cmd.add_option("--nodes", nodes, "node list, for isolated nodes");
        cmd.add_option("--name", name, "dataset name (default: edge file stem)");
        cmd.add_flag("--directed", directed, "treat edges as directed");
    }

    std::string dataset_name() const { return name.empty() ? std::filesystem::path(edges).stem().string() : name; }

    Graph graph() const { return load_edge_list(edges, directed, nodes); }
};

Strategy parse_strategy_arg(const std::string &text) {
    try {
        return Strategy::parse(text);
    } catch (const StrategyError &e) {
        throw UsageError(e.what());
    }
}

double check_fraction(double f) {
    if (!(f > 0.0 && f < 1.0))
        throw UsageError("--fraction must lie strictly between 0 and 1");
    return f;
}

std::size_t default_jobs() {
    if (const char *env = std::getenv("NETLABEL_JOBS")) {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ClassifierKind parse_classifier_arg(const std::string &text) {
    const auto kind = parse_classifier_kind(text);
    if (!kind)
        throw UsageError("--classifier must be tree_ensemble or naive_bayes");
    return *kind;
}

Algorithm parse_algorithm_arg(const std::string &text) {
    const auto alg = parse_algorithm(text);
    if (!alg)
        throw UsageError("--algorithm must be ica or lbp");
    return *alg;
}

void write_text_file(const std::filesystem::path &path, const std::function<void(std::ostream &)> &body) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    body(f);
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Active learning experiments for within-network node classification", "netlabel"};
    app.require_subcommand(1);

    // stats
    DatasetArgs stats_ds;
    auto *stats = app.add_subcommand("stats", "print basic graph properties as a CSV row");
    stats_ds.attach(*stats, false);

    // measures
    DatasetArgs measures_ds;
    auto *measures = app.add_subcommand("measures", "print every structural measure per node");
    measures_ds.attach(*measures, false);

    // select
    DatasetArgs select_ds;
    std::string select_strategy;
    double select_fraction = 0.0;
    std::uint64_t select_seed = 42;
    auto *select = app.add_subcommand("select", "print the seed set chosen by a strategy");
    select_ds.attach(*select, false);
    select->add_option("--strategy", select_strategy, "mode:measure:direction or random")->required();
    select->add_option("--fraction", select_fraction, "fraction of nodes to acquire")->required();
    select->add_option("--seed", select_seed, "random seed");

    // run
    DatasetArgs run_ds;
    std::string run_algorithm;
    std::string run_strategy;
    double run_fraction = 0.0;
    std::uint64_t run_seed = 42;
    std::size_t run_index = 0;
    std::string run_classifier;
    std::string run_debug;
    auto *run = app.add_subcommand("run", "run a single experiment cell");
    run_ds.attach(*run, true);
    run->add_option("--algorithm", run_algorithm, "ica or lbp")->required();
    run->add_option("--strategy", run_strategy, "mode:measure:direction or random")->required();
    run->add_option("--fraction", run_fraction, "fraction of known labels")->required();
    run->add_option("--seed", run_seed, "master seed");
    run->add_option("--run", run_index, "run index");
    run->add_option("--classifier", run_classifier, "tree_ensemble or naive_bayes");
    run->add_option("--debug-beliefs", run_debug, "directory for LBP belief dumps");

    // sweep
    std::string sweep_config;
    std::string sweep_out;
    std::size_t sweep_jobs = 0;
    std::optional<std::uint64_t> sweep_seed;
    std::string sweep_classifier;
    std::string sweep_debug;
    auto *sweep = app.add_subcommand("sweep", "run every configured cell and write results.csv");
    sweep->add_option("--config", sweep_config, "JSON sweep configuration")->required()->check(CLI::ExistingFile);
    sweep->add_option("--out", sweep_out, "output directory (overrides the config)");
    sweep->add_option("--jobs", sweep_jobs, "worker threads (default: NETLABEL_JOBS or hardware threads)");
    sweep->add_option("--seed", sweep_seed, "master seed (overrides the config)");
    sweep->add_option("--classifier", sweep_classifier, "tree_ensemble or naive_bayes");
    sweep->add_option("--debug-beliefs", sweep_debug, "directory for LBP belief dumps");

    // report
    std::string report_results;
    std::string report_out = "report";
    std::string report_datasets;
    auto *report = app.add_subcommand("report", "aggregate a result CSV into tables and SVG plots");
    report->add_option("results", report_results, "result CSV")->required()->check(CLI::ExistingFile);
    report->add_option("--out", report_out, "output directory");
    report->add_option("--datasets", report_datasets, "dataset summary CSV (default: datasets.csv beside results)");

    // netgen
    std::string gen_kind;
    GenSpec gen;
    std::string gen_out;
    auto *netgen = app.add_subcommand("netgen", "generate a labelled synthetic graph");
    netgen->add_option("--kind", gen_kind, "planted_partition, small_world or sparse_random")->required();
    netgen->add_option("--n", gen.n, "node count")->required();
    netgen->add_option("--blocks", gen.blocks, "label count");
    netgen->add_option("--p-in", gen.p_in, "planted_partition: edge probability inside a block");
    netgen->add_option("--p-out", gen.p_out, "planted_partition: edge probability across blocks");
    netgen->add_option("--ring-degree", gen.ring_degree, "small_world: ring lattice degree");
    netgen->add_option("--beta", gen.beta, "small_world: rewiring probability");
    netgen->add_option("--p", gen.p, "sparse_random: edge probability");
    netgen->add_option("--seed", gen.seed, "random seed");
    netgen->add_option("--out", gen_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (stats->parsed()) {
            const Graph g = stats_ds.graph();
            DatasetSummary summary{stats_ds.dataset_name(), g.directed(), 0, {}};
            if (stats_ds.labels.empty()) {
                summary.stats = graph_stats(g);
            } else {
                const Labeling truth = load_labels(stats_ds.labels, g);
                summary.label_count = truth.label_count();
                summary.stats = graph_stats(g, truth);
            }
            write_dataset_summary_csv({summary}, out);
        } else if (measures->parsed()) {
            const Graph g = measures_ds.graph();
            const MeasureTable table = compute_all_measures(g);
            out << "node_id,measure,value\n";
            for (NodeIndex v = 0; v < g.node_count(); ++v)
                for (const auto &scores : table)
                    out << g.id(v) << ',' << to_string(scores.measure) << ',' << format_double(scores.values[v])
                        << '\n';
        } else if (select->parsed()) {
            const Strategy strategy = parse_strategy_arg(select_strategy);
            check_fraction(select_fraction);
            const Graph g = select_ds.graph();
            Rng rng(select_seed);
            const SeedSet seeds = select_seeds(strategy, g, compute_all_measures(g),
                                               seed_size_for_fraction(select_fraction, g.node_count()), rng);
            err << "nominal " << seeds.nominal_size << ", realized " << seeds.realized_size() << '\n';
            out << "node_id\n";
            for (NodeIndex v : seeds.nodes)
                out << g.id(v) << '\n';
        } else if (run->parsed()) {
            CellSpec cell;
            cell.algorithm = parse_algorithm_arg(run_algorithm);
            cell.strategy = parse_strategy_arg(run_strategy);
            cell.fraction = check_fraction(run_fraction);
            cell.run_index = run_index;
            RunOptions opts;
            if (!run_classifier.empty())
                opts.ica.classifier.kind = parse_classifier_arg(run_classifier);
            const Dataset ds = load_dataset(DatasetSource{run_ds.dataset_name(), run_ds.edges, run_ds.labels,
                                                          run_ds.nodes, run_ds.directed, std::nullopt});
            cell.seed = derive_cell_seed(run_seed, ds.name, cell.algorithm, cell.strategy, cell.fraction, run_index);
            const CellOutcome outcome = run_cell(ds, cell, opts);
            if (!run_debug.empty() && !outcome.beliefs.empty()) {
                std::filesystem::create_directories(run_debug);
                write_beliefs(std::filesystem::path(run_debug) / belief_file_name(outcome.result), ds, outcome);
            }
            out << kResultHeader << '\n' << format_result_row(outcome.result) << '\n';
        } else if (sweep->parsed()) {
            SweepConfig cfg = load_sweep_config(sweep_config);
            if (!sweep_out.empty())
                cfg.output_dir = sweep_out;
            if (sweep_seed)
                cfg.master_seed = *sweep_seed;
            if (!sweep_classifier.empty())
                cfg.run.ica.classifier.kind = parse_classifier_arg(sweep_classifier);
            if (!sweep_debug.empty())
                cfg.debug_beliefs_dir = sweep_debug;
            const std::size_t jobs = sweep_jobs > 0 ? sweep_jobs : default_jobs();
            err << "sweep: " << cfg.datasets.size() << " datasets on " << jobs << " workers\n";
            const SweepOutput result = run_sweep(cfg, jobs, &err);
            std::filesystem::create_directories(cfg.output_dir);
            write_text_file(cfg.output_dir / "results.csv", [&](std::ostream &f) { write_results_csv(result.rows, f); });
            write_text_file(cfg.output_dir / "datasets.csv",
                            [&](std::ostream &f) { write_dataset_summary_csv(result.datasets, f); });
            out << result.rows.size() << " rows written to " << (cfg.output_dir / "results.csv").string() << '\n';
            for (const auto &failure : result.failures)
                err << "error: " << failure << '\n';
            if (!result.failures.empty())
                return kExitFailure;
        } else if (report->parsed()) {
            std::ifstream in(report_results);
            const auto records = read_results(in);
            std::filesystem::path summary_path = report_datasets;
            if (summary_path.empty())
                summary_path = std::filesystem::path(report_results).parent_path() / "datasets.csv";
            std::vector<DatasetSummary> datasets;
            if (std::filesystem::exists(summary_path)) {
                std::ifstream s(summary_path);
                datasets = read_dataset_summary_csv(s);
            } else if (!report_datasets.empty()) {
                throw std::runtime_error("cannot read '" + summary_path.string() + "'");
            }
            for (const auto &path : write_report(records, datasets, report_out))
                out << path.string() << '\n';
        } else if (netgen->parsed()) {
            const auto kind = parse_gen_kind(gen_kind);
            if (!kind)
                throw UsageError("--kind must be planted_partition, small_world or sparse_random");
            gen.kind = *kind;
            const GeneratedGraph result = generate(gen);
            const std::filesystem::path dir(gen_out);
            std::filesystem::create_directories(dir);
            write_text_file(dir / "edges.txt", [&](std::ostream &f) { write_edge_list(result.graph, f); });
            write_text_file(dir / "nodes.txt", [&](std::ostream &f) { write_node_list(result.graph, f); });
            write_text_file(dir / "labels.csv",
                            [&](std::ostream &f) { write_labels(result.graph, result.truth, f); });
            out << (dir / "edges.txt").string() << '\n'
                << (dir / "nodes.txt").string() << '\n'
                << (dir / "labels.csv").string() << '\n';
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

} // namespace netlabel::app
