#include "mmacov/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mmacov {

void SimConfig::validate() const {
    gradient.validate();
    if (max_rounds < 1) throw ValidationError("parameters.max_rounds", "must be >= 1");
    if (!(baseline_resolution > 0.0)) throw ValidationError("parameters.baseline_resolution_per_m", "must be > 0");
    if (!(pcvf_gain > 0.0)) throw ValidationError("parameters.pcvf_gain", "must be > 0");
}

StrategyKind parse_strategy(std::string_view name) {
    if (name == "mma") return StrategyKind::Mma;
    if (name == "minimax") return StrategyKind::Minimax;
    if (name == "pcvf") return StrategyKind::Pcvf;
    throw ValidationError("strategy", "unknown strategy '" + std::string(name) + "' (expected mma|minimax|pcvf)");
}

std::string_view strategy_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Mma: return "mma";
        case StrategyKind::Minimax: return "minimax";
        case StrategyKind::Pcvf: return "pcvf";
    }
    return "unknown";
}

Strategy make_strategy(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Mma: return {kind, mma_proposal};
        case StrategyKind::Minimax: return {kind, minimax_step};
        case StrategyKind::Pcvf: return {kind, pcvf_step};
    }
    throw std::logic_error("unhandled strategy kind");
}

StepProposal mma_proposal(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg) {
    const SensorStepResult r = mma_step(sensor, snapshot, cfg.gradient);
    return {r.moved, r.new_position};
}

RegionSpec baseline_region(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg) {
    RegionSpec spec = build_region_spec(sensor, snapshot);
    if (cfg.static_blind) {
        spec.static_sensors_in_range.clear();
    } else {
        spec.neighbors.insert(spec.neighbors.end(), spec.static_sensors_in_range.begin(),
                              spec.static_sensors_in_range.end());
    }
    return spec;
}

bool baseline_accepts(const RegionSpec& spec, const Point2& next, const SimConfig& cfg) {
    const LocalCoverage cov(spec, cfg.gradient.resolution);
    const double r_s = spec.owner.sensing_radius;
    return cov(next, r_s) >= cov(spec.owner.position, r_s) + cfg.gradient.epsilon;
}

RegionSamples sample_region(const RegionSpec& spec, double resolution) {
    const IntegrationGrid grid(*spec.field, resolution);
    const double reach = std::min(spec.reach(), std::hypot(spec.field->width(), spec.field->height()));
    const Point2 o = spec.owner.position;
    const auto r = grid.cells_in({o.x - reach, o.y - reach, o.x + reach, o.y + reach});
    const int w = r.i1 - r.i0;
    const int h = r.j1 - r.j0;
    RegionSamples out;
    if (w <= 0 || h <= 0) return out;
    std::vector<std::uint8_t> inside(static_cast<std::size_t>(w) * h, 0);
    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
            inside[static_cast<std::size_t>(j) * w + i] = in_region(grid.center(r.i0 + i, r.j0 + j), spec) ? 1 : 0;
        }
    }
    auto at = [&](int i, int j) {
        return i >= 0 && i < w && j >= 0 && j < h && inside[static_cast<std::size_t>(j) * w + i];
    };
    for (int j = 0; j < h; ++j) {
        for (int i = 0; i < w; ++i) {
            if (!at(i, j)) continue;
            const Point2 c = grid.center(r.i0 + i, r.j0 + j);
            out.interior.push_back(c);
            out.priority.push_back(evaluate_priority(spec.field->priority(), c));
            if (!at(i - 1, j) || !at(i + 1, j) || !at(i, j - 1) || !at(i, j + 1)) out.boundary.push_back(c);
        }
    }
    return out;
}

double max_distance(const Point2& c, const std::vector<Point2>& points) {
    double m = 0.0;
    for (const auto& p : points) m = std::max(m, distance2(c, p));
    return std::sqrt(m);
}

namespace {

struct Circle {
    Point2 c;
    double r2 = -1.0;
    bool contains(const Point2& p) const { return distance2(c, p) <= r2 * (1.0 + 1e-12) + 1e-18; }
};

Circle circle_from(const Point2& a, const Point2& b) {
    const Point2 c = (a + b) * 0.5;
    return {c, distance2(c, a)};
}

Circle circle_from(const Point2& a, const Point2& b, const Point2& c) {
    const Point2 ab = b - a;
    const Point2 ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    if (std::abs(d) < 1e-15) {
        // Collinear: the widest pair spans the circle.
        Circle best = circle_from(a, b);
        for (const Circle& alt : {circle_from(a, c), circle_from(b, c)}) {
            if (alt.r2 > best.r2) best = alt;
        }
        return best;
    }
    const double ab2 = ab.norm2();
    const double ac2 = ac.norm2();
    const Point2 centre{a.x + (ac.y * ab2 - ab.y * ac2) / d, a.y + (ab.x * ac2 - ac.x * ab2) / d};
    return {centre, distance2(centre, a)};
}

Point2 minimax_from_samples(const RegionSpec& spec, const RegionSamples& samples) {
    if (samples.boundary.empty()) return spec.owner.position;
    const Point2 centre = min_enclosing_center(samples.boundary);
    if (in_region(centre, spec)) return centre;
    Point2 best = spec.owner.position;
    double best_val = max_distance(best, samples.boundary);
    for (const auto& c : samples.interior) {
        const double v = max_distance(c, samples.boundary);
        if (v < best_val) {
            best_val = v;
            best = c;
        }
    }
    return best;
}

}  // namespace

Point2 min_enclosing_center(const std::vector<Point2>& points) {
    if (points.empty()) return {};
    Circle circle{points[0], 0.0};
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (circle.contains(points[i])) continue;
        circle = {points[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (circle.contains(points[j])) continue;
            circle = circle_from(points[i], points[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (!circle.contains(points[k])) circle = circle_from(points[i], points[j], points[k]);
            }
        }
    }
    return circle.c;
}

Point2 minimax_point(const RegionSpec& spec, double resolution) {
    return minimax_from_samples(spec, sample_region(spec, resolution));
}

StepProposal minimax_step(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg) {
    const Point2 x = sensor.position;
    const RegionSpec spec = baseline_region(sensor, snapshot, cfg);
    const RegionSamples samples = sample_region(spec, cfg.baseline_resolution);
    const Point2 target = minimax_from_samples(spec, samples);
    const double tol = cfg.gradient.step_tolerance;
    const double gain = max_distance(x, samples.boundary) - max_distance(target, samples.boundary);
    if (gain <= tol || distance(x, target) <= tol) return {false, x};
    const Point2 next = project_candidate(x, target, spec, tol);
    if (distance(x, next) <= tol || !baseline_accepts(spec, next, cfg)) return {false, x};
    return {true, next};
}

Point2 pcvf_force(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg) {
    const Point2 x = sensor.position;
    const RegionSpec spec = baseline_region(sensor, snapshot, cfg);
    const RegionSamples samples = sample_region(spec, cfg.baseline_resolution);
    Point2 force;
    double mass = 0.0;
    Point2 moment;
    for (std::size_t k = 0; k < samples.interior.size(); ++k) {
        mass += samples.priority[k];
        moment += samples.interior[k] * samples.priority[k];
    }
    if (mass > 0.0) force = moment / mass - x;
    for (const auto& j : spec.neighbors) {
        const Point2 away = x - j.position;
        const double d = away.norm();
        const double overlap = sensor.sensing_radius + j.sensing_radius - d;
        if (overlap <= 0.0 || d <= kGeomTol) continue;
        force += away / d * overlap;
    }
    return force;
}

StepProposal pcvf_step(const Sensor& sensor, const NetworkSnapshot& snapshot, const SimConfig& cfg) {
    const Point2 x = sensor.position;
    Point2 step = pcvf_force(sensor, snapshot, cfg) * cfg.pcvf_gain;
    const double len = step.norm();
    if (len > sensor.sensing_radius) step = step * (sensor.sensing_radius / len);
    const double tol = cfg.gradient.step_tolerance;
    if (step.norm() <= tol) return {false, x};
    const RegionSpec spec = baseline_region(sensor, snapshot, cfg);
    const Point2 next = project_candidate(x, x + step, spec, tol);
    if (distance(x, next) <= tol || !baseline_accepts(spec, next, cfg)) return {false, x};
    return {true, next};
}

}  // namespace mmacov
