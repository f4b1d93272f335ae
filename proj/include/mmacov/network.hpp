#pragma once

#include <limits>
#include <memory>
#include <vector>

#include "mmacov/field.hpp"
#include "mmacov/geometry.hpp"

namespace mmacov {

enum class SensorKind { Mobile, Static };

struct Sensor {
    int id = 0;
    SensorKind kind = SensorKind::Mobile;
    Point2 position;
    double sensing_radius = 1.0;  // also the multiplicative Voronoi weight
    double comm_radius = 4.0;

    bool is_mobile() const { return kind == SensorKind::Mobile; }
};

struct NetworkSnapshot {
    std::vector<Sensor> sensors;
    std::shared_ptr<const FieldModel> field;
    int round_index = 0;

    const Sensor& sensor(int id) const;
};

/// Throws ValidationError on duplicate ids, non-positive radii or sensors outside free space.
void validate_snapshot(const NetworkSnapshot& snapshot);

/// Everything a mobile sensor needs to evaluate its connectivity-aware multiplicatively
/// weighted Voronoi region from local information.
struct RegionSpec {
    Sensor owner;
    std::vector<Sensor> neighbors;
    double r_min = std::numeric_limits<double>::infinity();
    std::vector<Sensor> static_sensors_in_range;
    std::shared_ptr<const FieldModel> field;

    const std::vector<PolygonObstacle>& obstacles() const { return field->obstacles(); }
    /// Truncation radius min(r_c, r_min) around the owner.
    double reach() const { return std::min(owner.comm_radius, r_min); }
};

/// d(q, x_s) / r_s.
double weighted_distance(const Point2& q, const Sensor& s);

/// Mobile sensors whose broadcasts reach `i` (d <= r_c of the sender), excluding `i`.
std::vector<Sensor> neighbors_of(const Sensor& i, const NetworkSnapshot& snapshot);
/// Static sensors whose broadcasts reach `i`.
std::vector<Sensor> static_sensors_in_range(const Sensor& i, const NetworkSnapshot& snapshot);

/// Minimum of [d(i, j) - r_s,j]_+ over neighbors that `i` cannot reach back; +inf if none.
double compute_r_min(const Sensor& i, const std::vector<Sensor>& neighbors);

RegionSpec build_region_spec(const Sensor& owner, const NetworkSnapshot& snapshot);

/// Membership in the owner's region: free space, weighted-closer than every neighbor
/// (strict, no tolerance), and closer than min(r_c, r_min).
bool in_region(const Point2& q, const RegionSpec& spec);

/// True when q is sensed by static sensor s (distance and line of sight).
bool static_covers(const Sensor& s, const Point2& q, const std::vector<PolygonObstacle>& obstacles);

/// in_region and not covered by any static sensor in range.
bool in_region_uncovered(const Point2& q, const RegionSpec& spec);

/// Local covered area of a sensor: region membership, inside the sensing radius and
/// visible from the sensor.
class CoveredArea {
public:
    CoveredArea(const Sensor& sensor, RegionSpec spec) : sensor_(sensor), spec_(std::move(spec)) {}
    bool operator()(const Point2& q) const;
    const RegionSpec& spec() const { return spec_; }

private:
    Sensor sensor_;
    RegionSpec spec_;
};

CoveredArea covered_area_of(const Sensor& i, const RegionSpec& spec);

}  // namespace mmacov
