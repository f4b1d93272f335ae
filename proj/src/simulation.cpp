#include "mmacov/simulation.hpp"

#include <stdexcept>

#include "mmacov/coverage.hpp"

namespace mmacov {

std::size_t SimulationTrace::index_of(int sensor_id) const {
    for (std::size_t k = 0; k < sensors.size(); ++k) {
        if (sensors[k].id == sensor_id) return k;
    }
    throw std::out_of_range("sensor " + std::to_string(sensor_id) + " not in trace");
}

NetworkSnapshot SimulationTrace::snapshot_at(std::size_t round) const {
    NetworkSnapshot snap{sensors, field, static_cast<int>(round)};
    const auto& positions = rounds.at(round).positions;
    for (std::size_t k = 0; k < snap.sensors.size(); ++k) snap.sensors[k].position = positions[k];
    return snap;
}

RoundResult run_round(const NetworkSnapshot& snapshot, const Strategy& strategy, const SimConfig& cfg) {
    RoundResult result;
    result.snapshot = snapshot;
    result.snapshot.round_index = snapshot.round_index + 1;
    for (std::size_t k = 0; k < snapshot.sensors.size(); ++k) {
        const Sensor& s = snapshot.sensors[k];
        if (!s.is_mobile()) continue;
        const StepProposal p = strategy.step(s, snapshot, cfg);
        if (!p.moved) continue;
        result.snapshot.sensors[k].position = p.position;
        result.moves.push_back({s.id, {s.position, p.position}});
    }
    result.any_moved = !result.moves.empty();
    return result;
}

SimulationTrace run_simulation(const NetworkSnapshot& initial, const Strategy& strategy, const SimConfig& cfg) {
    cfg.validate();
    validate_snapshot(initial);
    const double res = cfg.gradient.resolution;
    const double field_area = weighted_field_area(*initial.field, res);

    SimulationTrace trace;
    trace.sensors = initial.sensors;
    trace.field = initial.field;
    trace.strategy = std::string(strategy.name());
    trace.resolution = res;

    auto record = [&](const NetworkSnapshot& snap, std::vector<SensorMove> moves) {
        RoundRecord rec;
        rec.round_index = snap.round_index;
        for (const auto& s : snap.sensors) rec.positions.push_back(s.position);
        rec.moves = std::move(moves);
        rec.weighted_coverage = overall_weighted_coverage(snap, res);
        rec.coverage_factor = rec.weighted_coverage / field_area;
        trace.rounds.push_back(std::move(rec));
    };

    NetworkSnapshot current = initial;
    current.round_index = 0;
    record(current, {});
    trace.terminated_by = Termination::MaxRounds;
    for (int r = 1; r <= cfg.max_rounds; ++r) {
        RoundResult step = run_round(current, strategy, cfg);
        current = std::move(step.snapshot);
        record(current, std::move(step.moves));
        trace.total_rounds = r;
        if (!step.any_moved) {
            trace.terminated_by = Termination::NoMove;
            break;
        }
    }
    return trace;
}

void EnergyModel::validate() const {
    if (!(joules_per_meter >= 0.0)) throw ValidationError("energy.joules_per_m", "must be >= 0");
    if (!(stop_cost_meters >= 0.0)) throw ValidationError("energy.stop_cost_m", "must be >= 0");
    if (!(start_cost_meters >= 0.0)) throw ValidationError("energy.start_cost_m", "must be >= 0");
}

namespace {

const SensorMove* move_of(const RoundRecord& rec, int sensor_id) {
    for (const auto& m : rec.moves) {
        if (m.sensor_id == sensor_id) return &m;
    }
    return nullptr;
}

}  // namespace

double energy_of(const SimulationTrace& trace, int sensor_id, const EnergyModel& model) {
    (void)trace.index_of(sensor_id);
    double meters = 0.0;
    bool moving = false;
    for (const auto& rec : trace.rounds) {
        const SensorMove* m = move_of(rec, sensor_id);
        if (m) {
            if (!moving) meters += model.start_cost_meters;
            meters += distance(m->segment.a, m->segment.b);
            moving = true;
        } else if (moving) {
            meters += model.stop_cost_meters;
            moving = false;
        }
    }
    if (moving) meters += model.stop_cost_meters;
    return meters * model.joules_per_meter;
}

double moving_distance(const SimulationTrace& trace, int sensor_id) {
    (void)trace.index_of(sensor_id);
    double total = 0.0;
    for (const auto& rec : trace.rounds) {
        if (const SensorMove* m = move_of(rec, sensor_id)) total += distance(m->segment.a, m->segment.b);
    }
    return total;
}

RunMetrics summarize(const SimulationTrace& trace, const EnergyModel& model) {
    RunMetrics m;
    if (trace.rounds.empty()) return m;
    m.coverage_initial = trace.rounds.front().coverage_factor;
    m.coverage_final = trace.rounds.back().coverage_factor;
    m.stop_round = trace.total_rounds;
    for (const auto& s : trace.sensors) {
        if (!s.is_mobile()) continue;
        m.per_sensor.push_back({s.id, moving_distance(trace, s.id), energy_of(trace, s.id, model)});
    }
    if (!m.per_sensor.empty()) {
        for (const auto& ps : m.per_sensor) {
            m.mean_distance_m += ps.distance_m;
            m.mean_energy_J += ps.energy_J;
        }
        m.mean_distance_m /= static_cast<double>(m.per_sensor.size());
        m.mean_energy_J /= static_cast<double>(m.per_sensor.size());
    }
    return m;
}

}  // namespace mmacov
