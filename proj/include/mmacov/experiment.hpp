#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmacov/scenario.hpp"

namespace mmacov {

struct ExperimentSuite {
    std::string name;
    ScenarioConfig base;
    std::vector<std::uint64_t> seeds;  // one per trial, distinct
    std::vector<StrategyKind> strategies;
    std::vector<int> sensor_counts;  // empty: keep the base scenario size

    void validate() const;
};

/// Suite document: {"schema": 1, "scenario": <path or object>, "trials": N,
/// "seed_start": S | "seeds": [...], "strategies": [...], "sensor_counts": [...]}.
/// Scenario paths are relative to the suite file.
ExperimentSuite parse_suite(const nlohmann::json& doc, const std::filesystem::path& base_dir);
ExperimentSuite load_suite(const std::filesystem::path& path);

/// One CSV row.
struct RunRecord {
    int run = 0;
    std::string strategy;
    std::uint64_t seed = 0;
    int n_sensors = 0;
    double coverage_initial = 0.0;
    double coverage_final = 0.0;
    int stop_round = 0;
    double mean_distance_m = 0.0;
    double mean_energy_J = 0.0;

    bool operator==(const RunRecord&) const = default;
};

struct RunFailure {
    int run = 0;
    std::string strategy;
    std::uint64_t seed = 0;
    int n_sensors = 0;
    std::string error;
};

struct Statistic {
    double mean = 0.0;
    double stddev = 0.0;  // sample standard deviation, 0 for a single run
};

struct AggregateRow {
    std::string strategy;
    int n_sensors = 0;
    int runs = 0;
    Statistic coverage_final;
    Statistic stop_round;
    Statistic mean_distance_m;
    Statistic mean_energy_J;
};

struct SuiteReport {
    std::string name;
    std::vector<RunRecord> runs;
    std::vector<RunFailure> failures;
    std::vector<AggregateRow> aggregates;

    const AggregateRow& aggregate(std::string_view strategy, int n_sensors) const;
};

RunRecord make_record(int run, const ScenarioConfig& scenario, const RunMetrics& metrics);

using SuiteProgress = std::function<void(const RunRecord&)>;

/// Runs every (sensor count x seed x strategy) combination. A failing run is recorded
/// and the suite continues.
SuiteReport run_suite(const ExperimentSuite& suite, const SuiteProgress& progress = {});

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& runs);

inline constexpr const char* kMetricsCsvHeader =
    "run,strategy,seed,n_sensors,coverage_initial,coverage_final,stop_round,mean_distance_m,mean_energy_J";

/// Doubles are written in shortest round-trip form.
void write_metrics_csv(std::ostream& out, const std::vector<RunRecord>& runs);
std::vector<RunRecord> read_metrics_csv(std::istream& in);

nlohmann::json summary_json(const SuiteReport& report);

}  // namespace mmacov
