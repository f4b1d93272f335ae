#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mmacov/network.hpp"
#include "mmacov/optimizer.hpp"

namespace mmacov {

struct SimConfig {
    GradientConfig gradient;
    int max_rounds = 200;
    /// Baselines ignore static sensors when building their regions.
    bool static_blind = false;
    /// Region sampling density used by the baseline strategies (samples per meter).
    double baseline_resolution = 5.0;
    /// Step gain applied to the PCVF resultant force.
    double pcvf_gain = 0.5;

    void validate() const;
};

struct StepProposal {
    bool moved = false;
    Point2 position;
};

enum class StrategyKind { Mma, Minimax, Pcvf };

StrategyKind parse_strategy(std::string_view name);
std::string_view strategy_name(StrategyKind kind);

/// Deployment rule applied to one mobile sensor against a round-start snapshot.
struct Strategy {
    StrategyKind kind = StrategyKind::Mma;
    std::function<StepProposal(const Sensor&, const NetworkSnapshot&, const SimConfig&)> step;

    std::string_view name() const { return strategy_name(kind); }
};

Strategy make_strategy(StrategyKind kind);

StepProposal mma_proposal(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg);

/// Region used by the baselines: the CAMW region, plus static sensors in range as
/// additional weighted generators unless cfg.static_blind is set. A static-blind region
/// also forgets which static sensors are in range.
RegionSpec baseline_region(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg);

/// Oscillation control shared by the baselines: a move is kept only when the sensor's own
/// coverage of its region grows by at least epsilon.
bool baseline_accepts(const RegionSpec& spec, const Point2& next, const SimConfig& cfg);

/// Grid samples of a region and the subset on its boundary.
struct RegionSamples {
    std::vector<Point2> interior;
    std::vector<Point2> boundary;
    std::vector<double> priority;  // per interior sample
};
RegionSamples sample_region(const RegionSpec& spec, double resolution);

/// Largest distance from c to any of the points.
double max_distance(const Point2& c, const std::vector<Point2>& points);

/// Centre of the smallest circle enclosing all points.
Point2 min_enclosing_center(const std::vector<Point2>& points);

/// Point of the region minimising the largest distance to its sampled boundary.
Point2 minimax_point(const RegionSpec& spec, double resolution);

StepProposal minimax_step(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg);

/// Resultant virtual force: neighbour repulsion while sensing disks overlap plus
/// attraction towards the priority-weighted centroid of the region.
Point2 pcvf_force(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg);

StepProposal pcvf_step(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg);

}  // namespace mmacov
