// mmacov command-line driver.
//
//   mmacov simulate --scenario FILE [--strategy mma|minimax|pcvf] [--seed N] [--out DIR]
//                   [--svg] [--resolution SPM] [--epsilon E] [--max-rounds R] [--static-blind]
//   mmacov suite --config FILE --out DIR
//
// Exit codes: 0 success, 1 validation error, 2 runtime failure.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "mmacov/experiment.hpp"
#include "mmacov/scenario.hpp"
#include "mmacov/simulation.hpp"
#include "mmacov/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

json trace_json(const mmacov::SimulationTrace& trace) {
    json sensors = json::array();
    for (const auto& s : trace.sensors) {
        sensors.push_back({{"id", s.id},
                           {"kind", s.is_mobile() ? "mobile" : "static"},
                           {"sensing_radius_m", s.sensing_radius},
                           {"comm_radius_m", s.comm_radius}});
    }
    json rounds = json::array();
    for (const auto& r : trace.rounds) {
        json positions = json::array();
        for (const auto& p : r.positions) positions.push_back({p.x, p.y});
        json moved = json::array();
        for (const auto& m : r.moves) moved.push_back(m.sensor_id);
        rounds.push_back({{"round", r.round_index},
                          {"coverage_factor", r.coverage_factor},
                          {"weighted_coverage_m2", r.weighted_coverage},
                          {"positions_m", positions},
                          {"moved", moved}});
    }
    return {{"schema", 1},
            {"strategy", trace.strategy},
            {"terminated_by", trace.terminated_by == mmacov::Termination::NoMove ? "no-move" : "max-rounds"},
            {"total_rounds", trace.total_rounds},
            {"resolution_per_m", trace.resolution},
            {"sensors", sensors},
            {"rounds", rounds}};
}

struct SimulateArgs {
    std::string scenario;
    std::optional<std::string> strategy;
    std::optional<std::uint64_t> seed;
    std::string out = "mmacov_out";
    bool svg = false;
    std::optional<double> resolution;
    std::optional<double> epsilon;
    std::optional<int> max_rounds;
    bool static_blind = false;
};

int simulate(const SimulateArgs& args) {
    mmacov::ScenarioConfig sc = mmacov::load_scenario(args.scenario);
    if (args.seed) sc = mmacov::with_seed(sc, *args.seed);
    if (args.strategy) sc.strategy = mmacov::parse_strategy(*args.strategy);
    if (args.resolution) sc.sim.gradient.resolution = *args.resolution;
    if (args.epsilon) sc.sim.gradient.epsilon = *args.epsilon;
    if (args.max_rounds) sc.sim.max_rounds = *args.max_rounds;
    if (args.static_blind) sc.sim.static_blind = true;
    sc.sim.validate();
    for (const auto& w : sc.warnings) std::cerr << "warning: " << w << '\n';

    const auto trace = mmacov::run_simulation(sc.snapshot(), mmacov::make_strategy(sc.strategy), sc.sim);
    const auto metrics = mmacov::summarize(trace, sc.energy);

    fs::create_directories(args.out);
    const fs::path out(args.out);
    {
        std::ofstream csv(out / "metrics.csv", std::ios::binary);
        mmacov::write_metrics_csv(csv, {mmacov::make_record(0, sc, metrics)});
    }
    json per_sensor = json::array();
    for (const auto& ps : metrics.per_sensor) {
        per_sensor.push_back({{"id", ps.sensor_id}, {"distance_m", ps.distance_m}, {"energy_J", ps.energy_J}});
    }
    const json summary = {{"schema", 1},
                          {"scenario", sc.name},
                          {"strategy", trace.strategy},
                          {"seed", sc.seed},
                          {"coverage_initial", metrics.coverage_initial},
                          {"coverage_final", metrics.coverage_final},
                          {"stop_round", metrics.stop_round},
                          {"terminated_by", trace.terminated_by == mmacov::Termination::NoMove ? "no-move" : "max-rounds"},
                          {"mean_distance_m", metrics.mean_distance_m},
                          {"mean_energy_J", metrics.mean_energy_J},
                          {"per_sensor", per_sensor},
                          {"warnings", sc.warnings}};
    write_file(out / "summary.json", summary.dump(2) + "\n");
    write_file(out / "trace.json", trace_json(trace).dump() + "\n");
    if (args.svg) {
        const std::size_t last = trace.rounds.size() - 1;
        write_file(out / "initial.svg", mmacov::render_svg(trace, 0, 0));
        write_file(out / "final.svg", mmacov::render_svg(trace, last, last));
        write_file(out / "trajectories.svg", mmacov::render_svg(trace, 0, last));
    }
    std::cout << trace.strategy << ": coverage " << metrics.coverage_initial << " -> " << metrics.coverage_final
              << " in " << metrics.stop_round << " rounds, mean distance " << metrics.mean_distance_m
              << " m, mean energy " << metrics.mean_energy_J << " J\n";
    return 0;
}

int suite(const std::string& config, const std::string& out_dir) {
    const mmacov::ExperimentSuite s = mmacov::load_suite(config);
    const auto report = mmacov::run_suite(s, [](const mmacov::RunRecord& r) {
        std::cerr << "run " << r.run << " " << r.strategy << " seed=" << r.seed << " n=" << r.n_sensors
                  << " coverage " << r.coverage_initial << " -> " << r.coverage_final << '\n';
    });
    fs::create_directories(out_dir);
    {
        std::ofstream csv(fs::path(out_dir) / "metrics.csv", std::ios::binary);
        mmacov::write_metrics_csv(csv, report.runs);
    }
    write_file(fs::path(out_dir) / "summary.json", mmacov::summary_json(report).dump(2) + "\n");
    for (const auto& a : report.aggregates) {
        std::cout << a.strategy << " n=" << a.n_sensors << ": coverage " << a.coverage_final.mean << " +/- "
                  << a.coverage_final.stddev << ", stop round " << a.stop_round.mean << ", distance "
                  << a.mean_distance_m.mean << " m, energy " << a.mean_energy_J.mean << " J\n";
    }
    for (const auto& f : report.failures) std::cerr << "run " << f.run << " failed: " << f.error << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coverage-maximising deployment of heterogeneous mobile/static sensor networks"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Run one scenario");
    sim_cmd->add_option("--scenario", sim.scenario, "Scenario JSON file")->required();
    sim_cmd->add_option("--strategy", sim.strategy, "mma | minimax | pcvf");
    sim_cmd->add_option("--seed", sim.seed, "Placement seed (generator scenarios)");
    sim_cmd->add_option("--out", sim.out, "Output directory");
    sim_cmd->add_flag("--svg", sim.svg, "Write initial/final/trajectory SVG snapshots");
    sim_cmd->add_option("--resolution", sim.resolution, "Integration samples per meter");
    sim_cmd->add_option("--epsilon", sim.epsilon, "Movement threshold in m^2");
    sim_cmd->add_option("--max-rounds", sim.max_rounds, "Round limit");
    sim_cmd->add_flag("--static-blind", sim.static_blind, "Baselines ignore static sensors");

    std::string suite_config;
    std::string suite_out;
    auto* suite_cmd = app.add_subcommand("suite", "Run a Monte Carlo experiment suite");
    suite_cmd->add_option("--config", suite_config, "Suite JSON file")->required();
    suite_cmd->add_option("--out", suite_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (*sim_cmd) return simulate(sim);
        return suite(suite_config, suite_out);
    } catch (const mmacov::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
