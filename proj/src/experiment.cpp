#include "mmacov/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace mmacov {

using nlohmann::json;

void ExperimentSuite::validate() const {
    if (seeds.empty()) throw ValidationError("trials", "must be >= 1");
    if (std::set<std::uint64_t>(seeds.begin(), seeds.end()).size() != seeds.size()) {
        throw ValidationError("seeds", "must be distinct");
    }
    if (strategies.empty()) throw ValidationError("strategies", "needs at least one strategy");
    for (int n : sensor_counts) {
        if (n < 1) throw ValidationError("sensor_counts", "must be >= 1");
    }
    if (!sensor_counts.empty() && !base.generator) {
        throw ValidationError("sensor_counts", "requires a generator-based scenario");
    }
}

ExperimentSuite parse_suite(const json& doc, const std::filesystem::path& base_dir) {
    if (!doc.is_object()) throw ValidationError("suite", "expected a JSON object");
    if (!doc.contains("schema") || !doc.at("schema").is_number_integer() || doc.at("schema").get<int>() != 1) {
        throw ValidationError("schema", "unsupported schema version (expected 1)");
    }
    ExperimentSuite suite;
    suite.name = doc.value("name", std::string("suite"));
    if (!doc.contains("scenario")) throw ValidationError("scenario", "missing");
    const auto& sc = doc.at("scenario");
    suite.base = sc.is_string() ? load_scenario(base_dir / sc.get<std::string>()) : parse_scenario(sc);

    if (doc.contains("seeds")) {
        for (const auto& s : doc.at("seeds")) {
            if (!s.is_number_unsigned()) throw ValidationError("seeds", "expected non-negative integers");
            suite.seeds.push_back(s.get<std::uint64_t>());
        }
    } else {
        const int trials = doc.value("trials", 1);
        if (trials < 1) throw ValidationError("trials", "must be >= 1");
        const std::uint64_t start = doc.value("seed_start", std::uint64_t{1});
        for (int t = 0; t < trials; ++t) suite.seeds.push_back(start + static_cast<std::uint64_t>(t));
    }
    if (doc.contains("strategies")) {
        for (const auto& s : doc.at("strategies")) suite.strategies.push_back(parse_strategy(s.get<std::string>()));
    } else {
        suite.strategies.push_back(suite.base.strategy);
    }
    if (doc.contains("sensor_counts")) {
        for (const auto& n : doc.at("sensor_counts")) {
            if (!n.is_number_integer()) throw ValidationError("sensor_counts", "expected integers");
            suite.sensor_counts.push_back(n.get<int>());
        }
    }
    suite.validate();
    return suite;
}

ExperimentSuite load_suite(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path.string(), "cannot open suite file");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path.string(), std::string("parse error: ") + e.what());
    }
    try {
        return parse_suite(doc, path.parent_path());
    } catch (const json::exception& e) {
        throw ValidationError(path.string(), std::string("malformed value: ") + e.what());
    }
}

const AggregateRow& SuiteReport::aggregate(std::string_view strategy, int n_sensors) const {
    for (const auto& a : aggregates) {
        if (a.strategy == strategy && a.n_sensors == n_sensors) return a;
    }
    throw std::out_of_range("no aggregate for " + std::string(strategy) + " with " + std::to_string(n_sensors) +
                            " sensors");
}

RunRecord make_record(int run, const ScenarioConfig& scenario, const RunMetrics& metrics) {
    RunRecord r;
    r.run = run;
    r.strategy = std::string(strategy_name(scenario.strategy));
    r.seed = scenario.seed;
    r.n_sensors = static_cast<int>(scenario.sensors.size());
    r.coverage_initial = metrics.coverage_initial;
    r.coverage_final = metrics.coverage_final;
    r.stop_round = metrics.stop_round;
    r.mean_distance_m = metrics.mean_distance_m;
    r.mean_energy_J = metrics.mean_energy_J;
    return r;
}

SuiteReport run_suite(const ExperimentSuite& suite, const SuiteProgress& progress) {
    suite.validate();
    SuiteReport report;
    report.name = suite.name;
    std::vector<int> counts = suite.sensor_counts;
    if (counts.empty()) counts.push_back(-1);
    int run = 0;
    for (int count : counts) {
        const ScenarioConfig sized = count < 0 ? suite.base : with_sensor_count(suite.base, count);
        for (std::uint64_t seed : suite.seeds) {
            for (StrategyKind kind : suite.strategies) {
                const int this_run = run++;
                try {
                    ScenarioConfig sc = with_seed(sized, seed);
                    sc.strategy = kind;
                    const SimulationTrace trace = run_simulation(sc.snapshot(), make_strategy(kind), sc.sim);
                    report.runs.push_back(make_record(this_run, sc, summarize(trace, sc.energy)));
                    if (progress) progress(report.runs.back());
                } catch (const std::exception& e) {
                    report.failures.push_back({this_run, std::string(strategy_name(kind)), seed,
                                               count < 0 ? static_cast<int>(sized.sensors.size()) : count, e.what()});
                }
            }
        }
    }
    report.aggregates = aggregate(report.runs);
    return report;
}

namespace {

Statistic statistic(const std::vector<double>& xs) {
    Statistic s;
    if (xs.empty()) return s;
    for (double x : xs) s.mean += x;
    s.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1) {
        double ss = 0.0;
        for (double x : xs) ss += (x - s.mean) * (x - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
    }
    return s;
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <typename T>
T parse_field(const std::string& text, const char* name) {
    T value{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw std::runtime_error(std::string("metrics csv: bad ") + name + " value '" + text + "'");
    }
    return value;
}

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& runs) {
    std::vector<AggregateRow> out;
    std::vector<std::pair<std::string, int>> keys;
    for (const auto& r : runs) {
        const std::pair<std::string, int> key{r.strategy, r.n_sensors};
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    }
    for (const auto& [strategy, n] : keys) {
        std::vector<double> cov, stop, dist, energy;
        for (const auto& r : runs) {
            if (r.strategy != strategy || r.n_sensors != n) continue;
            cov.push_back(r.coverage_final);
            stop.push_back(r.stop_round);
            dist.push_back(r.mean_distance_m);
            energy.push_back(r.mean_energy_J);
        }
        out.push_back({strategy, n, static_cast<int>(cov.size()), statistic(cov), statistic(stop), statistic(dist),
                       statistic(energy)});
    }
    return out;
}

void write_metrics_csv(std::ostream& out, const std::vector<RunRecord>& runs) {
    out << kMetricsCsvHeader << '\n';
    for (const auto& r : runs) {
        out << r.run << ',' << r.strategy << ',' << r.seed << ',' << r.n_sensors << ','
            << format_double(r.coverage_initial) << ',' << format_double(r.coverage_final) << ',' << r.stop_round
            << ',' << format_double(r.mean_distance_m) << ',' << format_double(r.mean_energy_J) << '\n';
    }
}

std::vector<RunRecord> read_metrics_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kMetricsCsvHeader) {
        throw std::runtime_error("metrics csv: unexpected header");
    }
    std::vector<RunRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) cols.push_back(col);
        if (cols.size() != 9) throw std::runtime_error("metrics csv: expected 9 columns");
        RunRecord r;
        r.run = parse_field<int>(cols[0], "run");
        r.strategy = cols[1];
        r.seed = parse_field<std::uint64_t>(cols[2], "seed");
        r.n_sensors = parse_field<int>(cols[3], "n_sensors");
        r.coverage_initial = parse_field<double>(cols[4], "coverage_initial");
        r.coverage_final = parse_field<double>(cols[5], "coverage_final");
        r.stop_round = parse_field<int>(cols[6], "stop_round");
        r.mean_distance_m = parse_field<double>(cols[7], "mean_distance_m");
        r.mean_energy_J = parse_field<double>(cols[8], "mean_energy_J");
        out.push_back(std::move(r));
    }
    return out;
}

json summary_json(const SuiteReport& report) {
    auto stat = [](const Statistic& s) { return json{{"mean", s.mean}, {"std", s.stddev}}; };
    json aggregates = json::array();
    for (const auto& a : report.aggregates) {
        aggregates.push_back({{"strategy", a.strategy},
                              {"n_sensors", a.n_sensors},
                              {"runs", a.runs},
                              {"coverage_final", stat(a.coverage_final)},
                              {"stop_round", stat(a.stop_round)},
                              {"mean_distance_m", stat(a.mean_distance_m)},
                              {"mean_energy_J", stat(a.mean_energy_J)}});
    }
    json failures = json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"run", f.run}, {"strategy", f.strategy}, {"seed", f.seed}, {"n_sensors", f.n_sensors},
                            {"error", f.error}});
    }
    return {{"schema", 1}, {"suite", report.name}, {"runs", report.runs.size()},
            {"aggregates", aggregates}, {"failures", failures}};
}

}  // namespace mmacov
