#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mmacov/field.hpp"
#include "mmacov/network.hpp"
#include "mmacov/simulation.hpp"
#include "mmacov/strategies.hpp"

namespace mmacov {

/// SplitMix64 (Steele, Lea and Flood 2014): state advances by 0x9E3779B97F4A7C15 and each
/// output is the state passed through the fixed 64-bit finaliser. uniform() takes the top
/// 53 bits. Fully specified, so placements can be reproduced in any language.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

struct RadiusRange {
    double lo = 1.0;
    double hi = 1.0;
};

/// Random placement of a heterogeneous network. Mobile sensors come first (ids 0..m-1),
/// then static ones. Per sensor the generator draws the sensing radius, then x, then y,
/// rejecting positions outside free space.
struct SensorGenerator {
    int mobile_count = 0;
    int static_count = 0;
    RadiusRange mobile_sensing_radius{2.0, 4.0};
    RadiusRange static_sensing_radius{2.0, 2.0};
    std::vector<double> mobile_sensing_radii;  // overrides the range when non-empty
    double comm_radius_factor = 4.0;
    std::optional<BoundingBox> placement_region;
};

struct ScenarioConfig {
    std::string name;
    std::shared_ptr<const FieldModel> field;
    std::optional<SensorGenerator> generator;
    std::vector<Sensor> sensors;  // explicit, or expanded from the generator
    StrategyKind strategy = StrategyKind::Mma;
    SimConfig sim;
    EnergyModel energy;
    std::uint64_t seed = 1;
    std::vector<std::string> warnings;

    NetworkSnapshot snapshot() const { return {sensors, field, 0}; }
};

/// Parses and fully validates a scenario document (schema 1).
ScenarioConfig parse_scenario(const nlohmann::json& doc);
ScenarioConfig load_scenario(const std::filesystem::path& path);

std::vector<Sensor> generate_sensors(const FieldModel& field, const SensorGenerator& gen, std::uint64_t seed);

/// Re-expands a generator scenario with another seed. Explicit sensor lists only take the seed.
ScenarioConfig with_seed(const ScenarioConfig& base, std::uint64_t seed);
/// Resizes a generator scenario keeping its static fraction.
ScenarioConfig with_sensor_count(const ScenarioConfig& base, int sensor_count);

}  // namespace mmacov
