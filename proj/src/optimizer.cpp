#include "mmacov/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace mmacov {

namespace {

constexpr double kLitOffset = 1e-6;  // m, probe offset to the unobstructed side of a shadow ray
constexpr double kInvPhi = 0.6180339887498949;

}  // namespace

void GradientConfig::validate() const {
    if (n_perimeter < 16) throw ValidationError("parameters.n_perimeter", "must be >= 16");
    if (n_radial < 4) throw ValidationError("parameters.n_radial", "must be >= 4");
    if (!(epsilon > 0.0)) throw ValidationError("parameters.epsilon_m2", "must be > 0");
    if (!(step_tolerance > 0.0)) throw ValidationError("parameters.step_tolerance_m", "must be > 0");
    if (max_line_search_evals < 3) throw ValidationError("parameters.max_line_search_evals", "must be >= 3");
    if (!(resolution > 0.0)) throw ValidationError("parameters.resolution_per_m", "must be > 0");
}

Point2 gradient_disk_term(const Point2& x, double sensing_radius, const RegionSpec& spec, int n_perimeter) {
    const auto& priority = spec.field->priority();
    const double step = 2.0 * std::numbers::pi / n_perimeter;
    auto normal_at = [](double theta) { return Point2{std::cos(theta), std::sin(theta)}; };
    auto counts = [&](double theta) {
        const Point2 q = x + normal_at(theta) * sensing_radius;
        return in_region_uncovered(q, spec) && is_visible(x, q, spec.obstacles());
    };
    auto value = [&](double theta) {
        const Point2 n = normal_at(theta);
        return n * evaluate_priority(priority, x + n * sensing_radius);
    };
    std::vector<char> in(n_perimeter + 1);
    for (int k = 0; k < n_perimeter; ++k) in[k] = counts(k * step);
    in[n_perimeter] = in[0];
    // Trapezoid rule on the periodic perimeter. Where neighbouring samples disagree the
    // arc endpoint is bisected and only the inside part is integrated, which removes the
    // half-sample jitter a plain sum has at region boundaries.
    Point2 sum;
    for (int k = 0; k < n_perimeter; ++k) {
        const double a = k * step;
        const double b = a + step;
        if (in[k] && in[k + 1]) {
            sum += (value(a) + value(b)) * (0.5 * step);
        } else if (in[k] != in[k + 1]) {
            double lo = a;
            double hi = b;
            for (int it = 0; it < 30; ++it) {
                const double mid = 0.5 * (lo + hi);
                (counts(mid) == static_cast<bool>(in[k]) ? lo : hi) = mid;
            }
            const double edge = 0.5 * (lo + hi);
            const double inside = in[k] ? a : b;
            sum += (value(inside) + value(edge)) * (0.5 * std::abs(edge - inside));
        }
    }
    return sum * sensing_radius;
}

Point2 gradient_shadow_term(const Point2& x, const ShadowVertex& sv, const RegionSpec& spec, int n_radial) {
    const auto& priority = spec.field->priority();
    const Point2 lit = perp(sv.outward_unit) * (sv.lit_side * kLitOffset);
    const double dl = sv.segment_length / n_radial;
    double weighted = 0.0;
    for (int k = 1; k <= n_radial; ++k) {
        const Point2 q = sv.vertex + sv.outward_unit * (k * dl);
        if (!in_region_uncovered(q, spec) || !is_visible(x, q + lit, spec.obstacles())) continue;
        weighted += k * evaluate_priority(priority, q);
    }
    // sum_k k*phi(q_k)*dl^2 approximates the integral of phi(l)*l dl along the segment.
    const double scale = sv.lit_side * dl * dl / sv.distance_to_sensor;
    return perp(sv.outward_unit) * (scale * weighted);
}

Point2 total_gradient(const Point2& x, double sensing_radius, const RegionSpec& spec, const GradientConfig& cfg) {
    Point2 g = gradient_disk_term(x, sensing_radius, spec, cfg.n_perimeter);
    for (const auto& sv : shadow_vertices(x, sensing_radius, spec.obstacles())) {
        g += gradient_shadow_term(x, sv, spec, cfg.n_radial);
    }
    return -g;
}

bool is_feasible_move(const Point2& x_current, const Point2& candidate, const RegionSpec& spec) {
    return in_region(candidate, spec) && is_visible(x_current, candidate, spec.obstacles());
}

double feasible_extent(const Point2& x, const Point2& u, const RegionSpec& spec, double step_tolerance) {
    const double limit = spec.reach() + distance(x, spec.owner.position);
    const double coarse = 5.0 * step_tolerance;
    double good = 0.0;
    double bad = -1.0;
    for (double t = coarse; t <= limit + coarse; t += coarse) {
        if (is_feasible_move(x, x + u * t, spec)) {
            good = t;
        } else {
            bad = t;
            break;
        }
    }
    if (bad < 0.0) return good;
    while (bad - good > step_tolerance) {
        const double mid = 0.5 * (good + bad);
        if (is_feasible_move(x, x + u * mid, spec)) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    return good;
}

double line_search(const Point2& x, const Point2& p, double sensing_radius, const LocalCoverage& coverage,
                   const GradientConfig& cfg) {
    const double norm = p.norm();
    if (!(norm > 0.0)) return 0.0;
    const Point2 u = p / norm;
    const RegionSpec& spec = coverage.spec();
    const double hi_limit = feasible_extent(x, u, spec, cfg.step_tolerance);
    if (hi_limit <= cfg.step_tolerance) return 0.0;

    int evals = 0;
    double best_t = 0.0;
    double best_f = 0.0;
    bool have_best = false;
    auto objective = [&](double t) {
        ++evals;
        const double f = -coverage(x + u * t, sensing_radius);
        if (!have_best || f < best_f || (f == best_f && t < best_t)) {
            best_t = t;
            best_f = f;
            have_best = true;
        }
        return f;
    };

    double a = 0.0;
    double b = hi_limit;
    objective(b);
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (evals < cfg.max_line_search_evals && (b - a) > cfg.step_tolerance) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = objective(d);
        }
    }
    return best_t > cfg.step_tolerance ? best_t : 0.0;
}

double line_search(const Point2& x, const Point2& p, double sensing_radius, const RegionSpec& spec,
                   const GradientConfig& cfg) {
    return line_search(x, p, sensing_radius, LocalCoverage(spec, cfg.resolution), cfg);
}

Point2 project_candidate(const Point2& x_current, const Point2& candidate, const RegionSpec& spec,
                         double step_tolerance) {
    if (is_feasible_move(x_current, candidate, spec)) return candidate;
    const Point2 dir = candidate - x_current;
    const double len = dir.norm();
    double good = 0.0;
    double bad = 1.0;
    while ((bad - good) * len > step_tolerance) {
        const double mid = 0.5 * (good + bad);
        if (is_feasible_move(x_current, x_current + dir * mid, spec)) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    return x_current + dir * good;
}

SensorStepResult mma_step(const Sensor& sensor, const NetworkSnapshot& snapshot, const GradientConfig& cfg) {
    SensorStepResult result;
    const Point2 x = sensor.position;
    result.new_position = x;
    const LocalCoverage coverage(build_region_spec(sensor, snapshot), cfg.resolution);
    result.coverage_before = coverage(x, sensor.sensing_radius);
    result.coverage_after = result.coverage_before;
    result.gradient = total_gradient(x, sensor.sensing_radius, coverage.spec(), cfg);
    if (result.gradient.norm() < cfg.gradient_floor) return result;

    const Point2 p = -result.gradient;
    const double alpha = line_search(x, p, sensor.sensing_radius, coverage, cfg);
    if (alpha <= 0.0) return result;
    const Point2 candidate =
        project_candidate(x, x + p / p.norm() * alpha, coverage.spec(), cfg.step_tolerance);
    result.alpha = distance(x, candidate);
    result.coverage_after = coverage(candidate, sensor.sensing_radius);
    if (result.coverage_after >= result.coverage_before + cfg.epsilon) {
        result.moved = true;
        result.new_position = candidate;
    }
    return result;
}

}  // namespace mmacov
