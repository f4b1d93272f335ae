#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mmacov/network.hpp"
#include "mmacov/strategies.hpp"

namespace mmacov {

struct SensorMove {
    int sensor_id = 0;
    Segment segment;
};

struct RoundRecord {
    int round_index = 0;
    std::vector<Point2> positions;  // same order as SimulationTrace::sensors
    std::vector<SensorMove> moves;
    double weighted_coverage = 0.0;
    double coverage_factor = 0.0;
};

enum class Termination { NoMove, MaxRounds };

/// Round 0 holds the initial configuration; round k > 0 the state after k executed rounds.
struct SimulationTrace {
    std::vector<Sensor> sensors;  // initial state; ids and radii never change
    std::shared_ptr<const FieldModel> field;
    std::string strategy;
    double resolution = 10.0;
    std::vector<RoundRecord> rounds;
    Termination terminated_by = Termination::NoMove;
    int total_rounds = 0;

    std::size_t index_of(int sensor_id) const;
    NetworkSnapshot snapshot_at(std::size_t round) const;
};

struct RoundResult {
    NetworkSnapshot snapshot;
    bool any_moved = false;
    std::vector<SensorMove> moves;
};

/// Synchronous round: every mobile sensor decides from `snapshot`, then all accepted
/// moves are applied together.
RoundResult run_round(const NetworkSnapshot& snapshot, const Strategy& strategy, const SimConfig& cfg);

/// Rounds until no sensor moves or cfg.max_rounds is reached. Validates the input first.
SimulationTrace run_simulation(const NetworkSnapshot& initial, const Strategy& strategy, const SimConfig& cfg);

struct EnergyModel {
    double joules_per_meter = 8.268;
    double stop_cost_meters = 1.0;
    double start_cost_meters = 4.0;

    void validate() const;
};

/// Each maximal run of consecutive moving rounds costs start + travelled length + stop,
/// in meter-equivalents times joules_per_meter.
double energy_of(const SimulationTrace& trace, int sensor_id, const EnergyModel& model);
double moving_distance(const SimulationTrace& trace, int sensor_id);

struct SensorMetrics {
    int sensor_id = 0;
    double distance_m = 0.0;
    double energy_J = 0.0;
};

struct RunMetrics {
    double coverage_initial = 0.0;
    double coverage_final = 0.0;
    int stop_round = 0;
    std::vector<SensorMetrics> per_sensor;  // mobile sensors only
    double mean_distance_m = 0.0;
    double mean_energy_J = 0.0;
};

RunMetrics summarize(const SimulationTrace& trace, const EnergyModel& model = {});

}  // namespace mmacov
