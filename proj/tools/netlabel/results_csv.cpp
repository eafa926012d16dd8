#include "results_csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <map>

#include "pipeline.hpp"

namespace netlabel::app {

namespace {

constexpr std::array<std::string_view, 12> kColumns = {
    "dataset", "algorithm", "mode",          "measure",       "direction",          "fraction",
    "run",     "error",     "nominal_seed", "realized_seed", "uncovered_fraction", "kl_divergence",
};

std::vector<std::string> split(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

double parse_number(const std::string &s, std::size_t lineno, std::string_view column) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw SchemaError("line " + std::to_string(lineno) + ": bad number '" + s + "' in column '" +
                          std::string(column) + "'");
    return v;
}

std::string strategy_fields(const Strategy &s) {
    if (s.is_random())
        return "random,,";
    return std::string(to_string(s.mode)) + ',' + std::string(to_string(s.measure)) + ',' +
           std::string(to_string(s.direction));
}

} // namespace

std::string format_result_row(const SweepResult &r) {
    std::string row = r.dataset;
    row += ',';
    row += to_string(r.algorithm);
    row += ',';
    row += strategy_fields(r.strategy);
    row += ',' + format_double(r.fraction);
    row += ',' + std::to_string(r.run_index);
    row += ',' + format_double(r.error);
    row += ',' + std::to_string(r.nominal_seed_size);
    row += ',' + std::to_string(r.realized_seed_size);
    row += ',' + format_double(r.uncovered_fraction);
    row += ',' + format_double(r.kl_divergence);
    return row;
}

std::string format_average_row(const ResultRecord &avg) {
    const auto &r = avg.result;
    std::string row = r.dataset;
    row += ',';
    row += to_string(r.algorithm);
    row += ',';
    row += strategy_fields(r.strategy);
    row += ',' + format_double(r.fraction);
    row += ",avg";
    row += ',' + format_double(r.error);
    row += ',' + format_double(avg.nominal_seed);
    row += ',' + format_double(avg.realized_seed);
    row += ',' + format_double(r.uncovered_fraction);
    row += ',' + format_double(r.kl_divergence);
    return row;
}

std::vector<ResultRecord> read_results(std::istream &in) {
    std::string line;
    if (!std::getline(in, line))
        throw SchemaError("result file is empty");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    const auto header = split(line);
    std::map<std::string_view, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i)
        col.emplace(header[i], i);
    std::array<std::size_t, kColumns.size()> idx{};
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
        const auto it = col.find(kColumns[c]);
        if (it == col.end())
            throw SchemaError("result file is missing column '" + std::string(kColumns[c]) + "'");
        idx[c] = it->second;
    }

    std::vector<ResultRecord> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto f = split(line);
        if (f.size() != header.size())
            throw SchemaError("line " + std::to_string(lineno) + ": expected " + std::to_string(header.size()) +
                              " fields, found " + std::to_string(f.size()));
        auto field = [&](std::size_t c) -> const std::string & { return f[idx[c]]; };

        ResultRecord rec;
        auto &r = rec.result;
        r.dataset = field(0);
        const auto alg = parse_algorithm(field(1));
        if (!alg)
            throw SchemaError("line " + std::to_string(lineno) + ": unknown algorithm '" + field(1) + "'");
        r.algorithm = *alg;
        const std::string strategy_text =
            field(2) == "random" ? std::string("random") : field(2) + ':' + field(3) + ':' + field(4);
        try {
            r.strategy = Strategy::parse(strategy_text);
        } catch (const StrategyError &e) {
            throw SchemaError("line " + std::to_string(lineno) + ": " + e.what());
        }
        r.fraction = parse_number(field(5), lineno, kColumns[5]);
        if (field(6) == "avg") {
            rec.average = true;
        } else {
            r.run_index = static_cast<std::size_t>(parse_number(field(6), lineno, kColumns[6]));
        }
        r.error = parse_number(field(7), lineno, kColumns[7]);
        rec.nominal_seed = parse_number(field(8), lineno, kColumns[8]);
        rec.realized_seed = parse_number(field(9), lineno, kColumns[9]);
        r.nominal_seed_size = static_cast<std::size_t>(rec.nominal_seed);
        r.realized_seed_size = static_cast<std::size_t>(rec.realized_seed);
        r.uncovered_fraction = parse_number(field(10), lineno, kColumns[10]);
        r.kl_divergence = parse_number(field(11), lineno, kColumns[11]);
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace netlabel::app
