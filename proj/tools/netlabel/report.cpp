#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <tuple>

#include "svg.hpp"

namespace netlabel::app {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string cell_text(double v) {
    return std::isnan(v) ? std::string() : format_double(v);
}

std::filesystem::path write_file(const std::filesystem::path &path, const std::string &body) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << body;
    return path;
}

std::vector<Strategy> non_random_strategies() {
    auto all = enumerate_strategies();
    all.pop_back();
    return all;
}

} // namespace

std::vector<CellAverage> average_cells(const std::vector<ResultRecord> &records) {
    std::map<std::string, std::size_t> dataset_order;
    for (const auto &rec : records)
        dataset_order.emplace(rec.result.dataset, dataset_order.size());

    using Key = std::tuple<std::size_t, int, std::size_t, double>;
    std::map<Key, CellAverage> groups;
    for (const auto &rec : records) {
        if (rec.average)
            continue;
        const auto &r = rec.result;
        const Key key{dataset_order.at(r.dataset), static_cast<int>(r.algorithm), canonical_index(r.strategy),
                      r.fraction};
        auto [it, fresh] = groups.try_emplace(key);
        auto &g = it->second;
        if (fresh) {
            g.dataset = r.dataset;
            g.algorithm = r.algorithm;
            g.strategy = r.strategy;
            g.fraction = r.fraction;
        }
        ++g.runs;
        g.error += r.error;
        g.nominal_seed += rec.nominal_seed;
        g.realized_seed += rec.realized_seed;
        g.uncovered_fraction += r.uncovered_fraction;
        g.kl_divergence += r.kl_divergence;
    }
    std::vector<CellAverage> out;
    for (auto &[key, g] : groups) {
        const double n = static_cast<double>(g.runs);
        g.error /= n;
        g.nominal_seed /= n;
        g.realized_seed /= n;
        g.uncovered_fraction /= n;
        g.kl_divergence /= n;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<ErrorTable> build_tables(const std::vector<CellAverage> &cells) {
    const auto columns = non_random_strategies();
    std::vector<ErrorTable> tables;
    auto table_for = [&](const CellAverage &c) -> ErrorTable & {
        for (auto &t : tables)
            if (t.dataset == c.dataset && t.algorithm == c.algorithm)
                return t;
        tables.push_back(ErrorTable{c.dataset, c.algorithm, {}, columns, {}, {}, {}, {}});
        return tables.back();
    };
    for (const auto &c : cells) {
        auto &t = table_for(c);
        if (std::find(t.fractions.begin(), t.fractions.end(), c.fraction) == t.fractions.end())
            t.fractions.push_back(c.fraction);
    }
    for (auto &t : tables) {
        std::sort(t.fractions.begin(), t.fractions.end());
        t.error.assign(t.fractions.size(), std::vector<double>(columns.size(), kNaN));
        t.random.assign(t.fractions.size(), kNaN);
    }
    for (const auto &c : cells) {
        auto &t = table_for(c);
        const auto fi = static_cast<std::size_t>(
            std::find(t.fractions.begin(), t.fractions.end(), c.fraction) - t.fractions.begin());
        if (c.strategy.is_random())
            t.random[fi] = c.error;
        else
            t.error[fi][canonical_index(c.strategy)] = c.error;
    }
    const std::size_t per_mode = kNonRandomPerMode;
    for (auto &t : tables) {
        for (std::size_t fi = 0; fi < t.fractions.size(); ++fi) {
            auto count = [&](std::size_t first) -> std::optional<std::size_t> {
                if (std::isnan(t.random[fi]))
                    return std::nullopt;
                std::vector<double> errs(t.error[fi].begin() + static_cast<std::ptrdiff_t>(first),
                                         t.error[fi].begin() + static_cast<std::ptrdiff_t>(first + per_mode));
                if (std::any_of(errs.begin(), errs.end(), [](double e) { return std::isnan(e); }))
                    return std::nullopt;
                return better_than_random_count(errs, t.random[fi]);
            };
            t.better_direct.push_back(count(0));
            t.better_neighbour.push_back(count(per_mode));
        }
    }
    return tables;
}

std::vector<RegressionRow> regress_better_counts(const std::vector<ErrorTable> &tables,
                                                 const std::vector<DatasetSummary> &datasets) {
    std::vector<RegressionRow> rows;
    for (Algorithm alg : {Algorithm::ica, Algorithm::lbp}) {
        for (SelectionMode mode : {SelectionMode::direct, SelectionMode::neighbour}) {
            for (const std::string predictor : {"clustering", "path_length"}) {
                std::vector<double> xs;
                std::vector<double> ys;
                for (const auto &t : tables) {
                    if (t.algorithm != alg)
                        continue;
                    const auto ds = std::find_if(datasets.begin(), datasets.end(),
                                                 [&](const DatasetSummary &d) { return d.name == t.dataset; });
                    if (ds == datasets.end())
                        continue;
                    const auto &counts = mode == SelectionMode::direct ? t.better_direct : t.better_neighbour;
                    if (counts.empty() || std::any_of(counts.begin(), counts.end(), [](auto c) { return !c; }))
                        continue;
                    double sum = 0.0;
                    for (const auto &c : counts)
                        sum += static_cast<double>(*c);
                    xs.push_back(predictor == "clustering" ? ds->stats.avg_clustering : ds->stats.avg_path_length);
                    ys.push_back(sum);
                }
                if (xs.size() < 3 || std::all_of(xs.begin(), xs.end(), [&](double v) { return v == xs.front(); }))
                    continue;
                rows.push_back(RegressionRow{alg, mode, predictor, xs.size(), robust_regression(xs, ys, true),
                                             robust_regression(xs, ys, false)});
            }
        }
    }
    return rows;
}

std::vector<std::filesystem::path> write_report(const std::vector<ResultRecord> &records,
                                                const std::vector<DatasetSummary> &datasets,
                                                const std::filesystem::path &out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;
    const auto cells = average_cells(records);

    {
        std::string body(kResultHeader);
        body += '\n';
        for (const auto &rec : records) {
            if (rec.average)
                continue;
            body += format_result_row(rec.result);
            body += '\n';
        }
        for (const auto &c : cells) {
            if (c.runs < 2)
                continue;
            ResultRecord avg;
            avg.average = true;
            avg.result.dataset = c.dataset;
            avg.result.algorithm = c.algorithm;
            avg.result.strategy = c.strategy;
            avg.result.fraction = c.fraction;
            avg.result.error = c.error;
            avg.result.uncovered_fraction = c.uncovered_fraction;
            avg.result.kl_divergence = c.kl_divergence;
            avg.nominal_seed = c.nominal_seed;
            avg.realized_seed = c.realized_seed;
            body += format_average_row(avg);
            body += '\n';
        }
        written.push_back(write_file(out_dir / "results_aggregated.csv", body));
    }

    const auto tables = build_tables(cells);
    for (const auto &t : tables) {
        const std::string stem = t.dataset + "_" + std::string(to_string(t.algorithm));

        std::string csv = "fraction";
        for (const auto &s : t.strategies)
            csv += ',' + s.to_string();
        csv += ",random,better_direct,better_neighbour\n";
        for (std::size_t fi = 0; fi < t.fractions.size(); ++fi) {
            csv += format_double(t.fractions[fi]);
            for (double e : t.error[fi])
                csv += ',' + cell_text(e);
            csv += ',' + cell_text(t.random[fi]);
            csv += ',' + (t.better_direct[fi] ? std::to_string(*t.better_direct[fi]) : std::string());
            csv += ',' + (t.better_neighbour[fi] ? std::to_string(*t.better_neighbour[fi]) : std::string());
            csv += '\n';
        }
        written.push_back(write_file(out_dir / (stem + "_table.csv"), csv));

        // best strategy per mode: lowest mean error over the fractions it covers
        auto best_of = [&](std::size_t first) -> std::optional<std::size_t> {
            std::optional<std::size_t> best;
            double best_mean = std::numeric_limits<double>::infinity();
            for (std::size_t s = first; s < first + kNonRandomPerMode; ++s) {
                double sum = 0.0;
                std::size_t n = 0;
                for (std::size_t fi = 0; fi < t.fractions.size(); ++fi)
                    if (!std::isnan(t.error[fi][s])) {
                        sum += t.error[fi][s];
                        ++n;
                    }
                if (n > 0 && sum / static_cast<double>(n) < best_mean) {
                    best_mean = sum / static_cast<double>(n);
                    best = s;
                }
            }
            return best;
        };
        std::vector<svg::Series> error_series;
        for (std::size_t first : {std::size_t{0}, kNonRandomPerMode}) {
            if (const auto best = best_of(first)) {
                svg::Series s{t.strategies[*best].to_string(), t.fractions, {}};
                for (std::size_t fi = 0; fi < t.fractions.size(); ++fi)
                    s.y.push_back(t.error[fi][*best]);
                error_series.push_back(std::move(s));
            }
        }
        error_series.push_back(svg::Series{"random (mean)", t.fractions, t.random});
        written.push_back(write_file(
            out_dir / (stem + "_error.svg"),
            svg::line_plot({t.dataset + " / " + std::string(to_string(t.algorithm)) + ": best strategies",
                            "fraction of known labels", "classification error"},
                           error_series)));

        std::vector<svg::Series> kl_series;
        std::vector<svg::Series> shrink_series;
        std::vector<std::string> bar_names;
        std::vector<double> bar_values;
        std::map<std::size_t, std::vector<const CellAverage *>> by_strategy;
        for (const auto &c : cells)
            if (c.dataset == t.dataset && c.algorithm == t.algorithm)
                by_strategy[canonical_index(c.strategy)].push_back(&c);
        for (const auto &[idx, group] : by_strategy) {
            const std::string name = group.front()->strategy.to_string();
            svg::Series kl{name, {}, {}};
            svg::Series shrink{name, {}, {}};
            double uncovered = 0.0;
            for (const auto *c : group) {
                kl.x.push_back(c->fraction);
                kl.y.push_back(c->kl_divergence);
                shrink.x.push_back(c->fraction);
                shrink.y.push_back(c->nominal_seed > 0.0 ? c->realized_seed / c->nominal_seed : kNaN);
                uncovered += c->uncovered_fraction;
            }
            kl_series.push_back(std::move(kl));
            if (group.front()->strategy.mode == SelectionMode::neighbour)
                shrink_series.push_back(std::move(shrink));
            bar_names.push_back(name);
            bar_values.push_back(uncovered / static_cast<double>(group.size()));
        }
        const std::string title = t.dataset + " / " + std::string(to_string(t.algorithm));
        written.push_back(write_file(
            out_dir / (stem + "_kl.svg"),
            svg::line_plot({title + ": seed label representativeness", "fraction of known labels", "KL divergence (nats)"},
                           kl_series)));
        written.push_back(write_file(
            out_dir / (stem + "_uncovered.svg"),
            svg::bar_plot({title + ": uncovered classes", "strategy", "mean uncovered fraction"}, bar_names,
                          bar_values)));
        written.push_back(write_file(
            out_dir / (stem + "_shrinkage.svg"),
            svg::line_plot({title + ": neighbour seed shrinkage", "fraction of known labels", "realized / nominal"},
                           shrink_series)));
    }

    const auto regressions = regress_better_counts(tables, datasets);
    for (Algorithm alg : {Algorithm::ica, Algorithm::lbp}) {
        std::string csv = "algorithm,mode,predictor,points,robust_slope,robust_intercept,robust_r_squared,ols_slope,"
                          "ols_intercept,ols_r_squared\n";
        bool any = false;
        for (const std::string predictor : {"clustering", "path_length"}) {
            std::vector<svg::Series> points;
            std::vector<svg::FittedLine> lines;
            for (const auto &row : regressions) {
                if (row.algorithm != alg || row.predictor != predictor)
                    continue;
                any = true;
                csv += std::string(to_string(alg)) + ',' + std::string(to_string(row.mode)) + ',' + predictor + ',' +
                       std::to_string(row.points) + ',' + format_double(row.robust.slope) + ',' +
                       format_double(row.robust.intercept) + ',' + format_double(row.robust.r_squared) + ',' +
                       format_double(row.ols.slope) + ',' + format_double(row.ols.intercept) + ',' +
                       format_double(row.ols.r_squared) + '\n';
                svg::Series s{std::string(to_string(row.mode)), {}, {}};
                for (const auto &t : tables) {
                    if (t.algorithm != alg)
                        continue;
                    const auto ds = std::find_if(datasets.begin(), datasets.end(),
                                                 [&](const DatasetSummary &d) { return d.name == t.dataset; });
                    const auto &counts = row.mode == SelectionMode::direct ? t.better_direct : t.better_neighbour;
                    if (ds == datasets.end() || counts.empty() ||
                        std::any_of(counts.begin(), counts.end(), [](auto c) { return !c; }))
                        continue;
                    double sum = 0.0;
                    for (const auto &c : counts)
                        sum += static_cast<double>(*c);
                    s.x.push_back(predictor == "clustering" ? ds->stats.avg_clustering : ds->stats.avg_path_length);
                    s.y.push_back(sum);
                }
                points.push_back(std::move(s));
                lines.push_back({row.robust.slope, row.robust.intercept,
                                 std::string(to_string(row.mode)) + " Huber fit"});
            }
            if (!points.empty()) {
                const std::string xlabel =
                    predictor == "clustering" ? "average clustering coefficient" : "average path length";
                written.push_back(write_file(
                    out_dir / ("all_" + std::string(to_string(alg)) + "_regression_" + predictor + ".svg"),
                    svg::scatter_plot({std::string(to_string(alg)) + ": strategies beating random vs " + xlabel,
                                       xlabel, "sum of # better over fractions"},
                                      points, lines)));
            }
        }
        if (any)
            written.push_back(write_file(out_dir / ("all_" + std::string(to_string(alg)) + "_regression.csv"), csv));
    }
    return written;
}

} // namespace netlabel::app
