#include "mmacov/network.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace mmacov {

const Sensor& NetworkSnapshot::sensor(int id) const {
    auto it = std::find_if(sensors.begin(), sensors.end(), [id](const Sensor& s) { return s.id == id; });
    if (it == sensors.end()) throw std::out_of_range("no sensor with id " + std::to_string(id));
    return *it;
}

void validate_snapshot(const NetworkSnapshot& snapshot) {
    if (!snapshot.field) throw ValidationError("field", "missing");
    std::set<int> ids;
    for (const auto& s : snapshot.sensors) {
        const std::string where = "sensors[" + std::to_string(s.id) + "]";
        if (!ids.insert(s.id).second) throw ValidationError(where + ".id", "duplicate sensor id");
        if (!(s.sensing_radius > 0.0) || !std::isfinite(s.sensing_radius)) {
            throw ValidationError(where + ".sensing_radius_m", "must be > 0");
        }
        if (!(s.comm_radius > 0.0) || !std::isfinite(s.comm_radius)) {
            throw ValidationError(where + ".comm_radius_m", "must be > 0");
        }
        if (!s.position.finite() || !snapshot.field->in_free_space(s.position)) {
            throw ValidationError(where + ".position_m", "not in free space");
        }
    }
}

double weighted_distance(const Point2& q, const Sensor& s) {
    return distance(q, s.position) / s.sensing_radius;
}

std::vector<Sensor> neighbors_of(const Sensor& i, const NetworkSnapshot& snapshot) {
    std::vector<Sensor> out;
    for (const auto& j : snapshot.sensors) {
        if (j.id == i.id || !j.is_mobile()) continue;
        if (distance(i.position, j.position) <= j.comm_radius) out.push_back(j);
    }
    return out;
}

std::vector<Sensor> static_sensors_in_range(const Sensor& i, const NetworkSnapshot& snapshot) {
    std::vector<Sensor> out;
    for (const auto& j : snapshot.sensors) {
        if (j.id == i.id || j.is_mobile()) continue;
        if (distance(i.position, j.position) <= j.comm_radius) out.push_back(j);
    }
    return out;
}

double compute_r_min(const Sensor& i, const std::vector<Sensor>& neighbors) {
    double r_min = std::numeric_limits<double>::infinity();
    for (const auto& j : neighbors) {
        const double d = distance(i.position, j.position);
        if (d <= i.comm_radius) continue;  // symmetric link
        r_min = std::min(r_min, std::max(d - j.sensing_radius, 0.0));
    }
    return r_min;
}

RegionSpec build_region_spec(const Sensor& owner, const NetworkSnapshot& snapshot) {
    RegionSpec spec;
    spec.owner = owner;
    spec.neighbors = neighbors_of(owner, snapshot);
    spec.r_min = compute_r_min(owner, spec.neighbors);
    spec.static_sensors_in_range = static_sensors_in_range(owner, snapshot);
    spec.field = snapshot.field;
    return spec;
}

bool in_region(const Point2& q, const RegionSpec& spec) {
    const double d_own = distance(q, spec.owner.position);
    if (!(d_own < spec.reach())) return false;
    const double w_own = d_own / spec.owner.sensing_radius;
    for (const auto& j : spec.neighbors) {
        if (!(w_own < weighted_distance(q, j))) return false;
    }
    return spec.field->in_free_space(q);
}

bool static_covers(const Sensor& s, const Point2& q, const std::vector<PolygonObstacle>& obstacles) {
    return distance2(q, s.position) <= s.sensing_radius * s.sensing_radius &&
           is_visible(s.position, q, obstacles);
}

bool in_region_uncovered(const Point2& q, const RegionSpec& spec) {
    if (!in_region(q, spec)) return false;
    for (const auto& s : spec.static_sensors_in_range) {
        if (static_covers(s, q, spec.obstacles())) return false;
    }
    return true;
}

bool CoveredArea::operator()(const Point2& q) const {
    return distance2(q, sensor_.position) <= sensor_.sensing_radius * sensor_.sensing_radius &&
           in_region(q, spec_) && is_visible(sensor_.position, q, spec_.obstacles());
}

CoveredArea covered_area_of(const Sensor& i, const RegionSpec& spec) { return CoveredArea(i, spec); }

}  // namespace mmacov
