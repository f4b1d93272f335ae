#pragma once
// Random networks and small builders shared by the unit and acceptance tests.

#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <vector>

#include "mmacov/field.hpp"
#include "mmacov/network.hpp"
#include "mmacov/scenario.hpp"

namespace fixtures {

using mmacov::Point2;

inline std::shared_ptr<const mmacov::FieldModel> open_field(double w, double h,
                                                            mmacov::PrioritySpec prio = mmacov::UniformPriority{}) {
    return std::make_shared<const mmacov::FieldModel>(w, h, std::vector<mmacov::PolygonObstacle>{}, std::move(prio));
}

inline mmacov::Sensor mobile(int id, Point2 p, double rs, double rc_factor = 4.0) {
    return {id, mmacov::SensorKind::Mobile, p, rs, rc_factor * rs};
}

inline mmacov::Sensor fixed(int id, Point2 p, double rs, double rc_factor = 4.0) {
    return {id, mmacov::SensorKind::Static, p, rs, rc_factor * rs};
}

/// Convex polygon with `n` vertices on a jittered circle.
inline mmacov::PolygonObstacle random_convex(mmacov::SplitMix64& rng, int id, Point2 c, double r, int n) {
    std::vector<Point2> v;
    for (int k = 0; k < n; ++k) {
        const double a = 2.0 * std::numbers::pi * (k + rng.uniform(-0.3, 0.3)) / n;
        const double rr = r * rng.uniform(0.6, 1.0);
        v.push_back({c.x + rr * std::cos(a), c.y + rr * std::sin(a)});
    }
    return mmacov::PolygonObstacle("o" + std::to_string(id), std::move(v));
}

struct RandomOptions {
    double width = 10.0;
    double height = 10.0;
    int max_obstacles = 3;
    bool obstacles = true;
    bool gaussian = true;
    int min_mobile = 2;
    int max_mobile = 6;
    int max_static = 2;
    double rs_lo = 1.0;
    double rs_hi = 2.5;
    double rc_lo = 2.2;  // as a multiple of r_s
    double rc_hi = 4.0;
};

/// Random valid snapshot. Obstacles are non-overlapping convex polygons, sensors sit in
/// free space. Returns nullopt when the drawn layout is invalid (caller just redraws).
inline std::optional<mmacov::NetworkSnapshot> random_network(mmacov::SplitMix64& rng, const RandomOptions& o) {
    std::vector<mmacov::PolygonObstacle> obs;
    if (o.obstacles) {
        const int n_obs = static_cast<int>(rng.uniform(0.0, o.max_obstacles + 1.0));
        for (int k = 0; k < n_obs; ++k) {
            const double r = rng.uniform(0.5, 1.5);
            const Point2 c{rng.uniform(r, o.width - r), rng.uniform(r, o.height - r)};
            auto p = random_convex(rng, k, c, r, 3 + static_cast<int>(rng.uniform(0.0, 4.0)));
            bool clash = false;
            for (const auto& q : obs) clash = clash || p.bounds().overlaps(q.bounds());
            if (!clash) obs.push_back(std::move(p));
        }
    }
    mmacov::PrioritySpec prio = mmacov::UniformPriority{};
    if (o.gaussian && rng.uniform() < 0.5) {
        mmacov::GaussianSumPriority g;
        const int terms = 1 + static_cast<int>(rng.uniform(0.0, 2.0));
        for (int k = 0; k < terms; ++k) {
            g.terms.push_back({{rng.uniform(0.0, o.width), rng.uniform(0.0, o.height)}, rng.uniform(0.02, 0.3),
                               rng.uniform(0.5, 2.0)});
        }
        prio = g;
    }
    std::shared_ptr<const mmacov::FieldModel> field;
    try {
        field = std::make_shared<const mmacov::FieldModel>(o.width, o.height, std::move(obs), std::move(prio));
    } catch (const mmacov::ValidationError&) {
        return std::nullopt;
    }
    const int n_mobile = o.min_mobile + static_cast<int>(rng.uniform(0.0, o.max_mobile - o.min_mobile + 1.0));
    const int n_static = static_cast<int>(rng.uniform(0.0, o.max_static + 1.0));
    std::vector<mmacov::Sensor> sensors;
    for (int k = 0; k < n_mobile + n_static; ++k) {
        const double rs = rng.uniform(o.rs_lo, o.rs_hi);
        const double rc = rs * rng.uniform(o.rc_lo, o.rc_hi);
        Point2 p;
        int tries = 0;
        do {
            p = {rng.uniform(0.0, o.width), rng.uniform(0.0, o.height)};
        } while (!field->in_free_space(p) && ++tries < 1000);
        if (tries >= 1000) return std::nullopt;
        sensors.push_back({k, k < n_mobile ? mmacov::SensorKind::Mobile : mmacov::SensorKind::Static, p, rs, rc});
    }
    return mmacov::NetworkSnapshot{std::move(sensors), std::move(field), 0};
}

}  // namespace fixtures
