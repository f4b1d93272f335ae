#pragma once
// Test-only reference implementations. Written independently of the library code paths
// they check: winding numbers instead of crossing tests, dense sampling instead of edge
// intersection, and polar quadrature instead of grid sums.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "mmacov/field.hpp"
#include "mmacov/geometry.hpp"
#include "mmacov/network.hpp"

namespace oracle {

using mmacov::Point2;

inline double dist(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline double seg_dist(const Point2& p, const Point2& a, const Point2& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double l2 = dx * dx + dy * dy;
    double t = l2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / l2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, {a.x + t * dx, a.y + t * dy});
}

/// Winding number of the closed ring around q (Sunday's formulation).
inline int winding_number(const Point2& q, std::span<const Point2> ring) {
    int wn = 0;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = ring[i];
        const Point2& b = ring[(i + 1) % n];
        const double side = (b.x - a.x) * (q.y - a.y) - (q.x - a.x) * (b.y - a.y);
        if (a.y <= q.y) {
            if (b.y > q.y && side > 0) ++wn;
        } else if (b.y <= q.y && side < 0) {
            --wn;
        }
    }
    return wn;
}

inline double boundary_dist(const Point2& q, std::span<const Point2> ring) {
    double d = INFINITY;
    for (std::size_t i = 0; i < ring.size(); ++i) d = std::min(d, seg_dist(q, ring[i], ring[(i + 1) % ring.size()]));
    return d;
}

/// Strict interior: nonzero winding and off the boundary.
inline bool inside(const Point2& q, const mmacov::PolygonObstacle& p) {
    return winding_number(q, p.vertices()) != 0 && boundary_dist(q, p.vertices()) > 1e-12;
}

inline bool inside_any(const Point2& q, const std::vector<mmacov::PolygonObstacle>& obs) {
    for (const auto& o : obs) {
        if (inside(q, o)) return true;
    }
    return false;
}

/// Samples the segment every `step` meters.
inline bool dense_visible(const Point2& a, const Point2& b, const std::vector<mmacov::PolygonObstacle>& obs,
                          double step = 1e-3) {
    const int n = std::max(2, static_cast<int>(std::ceil(dist(a, b) / step)));
    for (int k = 0; k <= n; ++k) {
        const double t = static_cast<double>(k) / n;
        if (inside_any({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}, obs)) return false;
    }
    return true;
}

/// Distance from the segment to the nearest obstacle vertex; small values mean a grazing
/// line of sight where sampling and exact tests can legitimately disagree.
inline double vertex_clearance(const Point2& a, const Point2& b, const std::vector<mmacov::PolygonObstacle>& obs) {
    double d = INFINITY;
    for (const auto& o : obs) {
        for (const auto& v : o.vertices()) d = std::min(d, seg_dist(v, a, b));
    }
    return d;
}

/// First distance along the ray x + t*u (|u| = 1) at which it enters an obstacle interior.
inline double ray_hit(const Point2& x, const Point2& u, const std::vector<mmacov::PolygonObstacle>& obs,
                      double t_max) {
    std::vector<double> ts{0.0, t_max};
    for (const auto& o : obs) {
        const std::size_t n = o.vertices().size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 a = o.vertices()[i];
            const Point2 b = o.vertices()[(i + 1) % n];
            const Point2 e{b.x - a.x, b.y - a.y};
            const double den = u.x * e.y - u.y * e.x;
            if (std::abs(den) < 1e-15) continue;
            const Point2 w{a.x - x.x, a.y - x.y};
            const double t = (w.x * e.y - w.y * e.x) / den;
            const double s = (w.x * u.y - w.y * u.x) / den;
            if (t > 0 && t < t_max && s >= -1e-12 && s <= 1 + 1e-12) ts.push_back(t);
        }
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        if (ts[k + 1] - ts[k] < 1e-13) continue;
        const double tm = 0.5 * (ts[k] + ts[k + 1]);
        if (inside_any({x.x + tm * u.x, x.y + tm * u.y}, obs)) return ts[k];
    }
    return t_max;
}

/// Region membership rebuilt from the definition: free space, weighted-closer than every
/// neighbor, inside min(r_c, r_min), and not sensed by an in-range static sensor.
inline bool member(const Point2& q, const mmacov::RegionSpec& spec) {
    const auto& f = *spec.field;
    if (q.x < 0 || q.y < 0 || q.x > f.width() || q.y > f.height()) return false;
    if (inside_any(q, f.obstacles())) return false;
    const double d_own = dist(q, spec.owner.position);
    if (!(d_own < std::min(spec.owner.comm_radius, spec.r_min))) return false;
    for (const auto& j : spec.neighbors) {
        if (!(d_own / spec.owner.sensing_radius < dist(q, j.position) / j.sensing_radius)) return false;
    }
    for (const auto& s : spec.static_sensors_in_range) {
        const double d = dist(q, s.position);
        if (d > s.sensing_radius) continue;
        if (d < 1e-15) return false;
        const Point2 u{(q.x - s.position.x) / d, (q.y - s.position.y) / d};
        if (ray_hit(s.position, u, f.obstacles(), d) >= d) return false;
    }
    return true;
}

// Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr std::array<double, 4> kGl4x{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                             0.8611363115940526};
inline constexpr std::array<double, 4> kGl4w{0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                             0.3478548451374538};
inline constexpr std::array<double, 6> kGl6x{-0.9324695142031521, -0.6612093864662645, -0.2386191860831909,
                                             0.2386191860831909,  0.6612093864662645,  0.9324695142031521};
inline constexpr std::array<double, 6> kGl6w{0.1713244923791704, 0.3607615730150910, 0.4679139345726910,
                                             0.4679139345726910, 0.3607615730150910, 0.1713244923791704};

struct PolarOptions {
    int panels = 720;            // uniform angular panels before obstacle breakpoints
    double scan_per_meter = 40;  // radial membership scan density
};

/// Weighted area of {q : |q - x| < r_s, q visible from x, member(q)} by polar quadrature.
/// Angular panels break at obstacle-vertex directions (where the visible radius jumps);
/// radial membership transitions are located by scan and bisection, then each member
/// interval is integrated with Gauss-Legendre.
inline double polar_coverage(const Point2& x, double r_s, const mmacov::RegionSpec& spec,
                             const PolarOptions& opt = {}) {
    const auto& obs = spec.field->obstacles();
    const auto& prio = spec.field->priority();
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> brk;
    for (int k = 0; k <= opt.panels; ++k) brk.push_back(two_pi * k / opt.panels);
    for (const auto& o : obs) {
        for (const auto& v : o.vertices()) {
            if (dist(v, x) >= r_s || dist(v, x) < 1e-12) continue;
            double a = std::atan2(v.y - x.y, v.x - x.x);
            if (a < 0) a += two_pi;
            brk.push_back(a);
        }
    }
    // Rays tangent to a circular boundary give square-root kinks.
    auto tangents = [&](const Point2& c, double rad) {
        const double d = dist(c, x);
        if (d <= rad || d - rad >= r_s) return;
        const double base = std::atan2(c.y - x.y, c.x - x.x);
        const double off = std::asin(rad / d);
        for (double a : {base - off, base + off}) {
            a = std::fmod(a + 2 * two_pi, two_pi);
            brk.push_back(a);
        }
    };
    const mmacov::Sensor& own = spec.owner;
    tangents(own.position, std::min(own.comm_radius, spec.r_min));
    for (const auto& s : spec.static_sensors_in_range) tangents(s.position, s.sensing_radius);
    for (const auto& j : spec.neighbors) {
        const double k = own.sensing_radius / j.sensing_radius;
        if (std::abs(k - 1.0) < 1e-12) continue;
        const Point2 c = (own.position - j.position * (k * k)) / (1 - k * k);
        tangents(c, k * dist(own.position, j.position) / std::abs(1 - k * k));
    }
    // Directions where the covered set's edge crosses the sensing circle are kinks of
    // the angular integrand; put panel breaks there too.
    auto rim = [&](double theta) {
        const Point2 u{std::cos(theta), std::sin(theta)};
        const double r = r_s * (1 - 1e-9);
        return member({x.x + r * u.x, x.y + r * u.y}, spec) && ray_hit(x, u, obs, r) >= r;
    };
    const int rim_samples = 4 * opt.panels;
    bool prev_rim = rim(0.0);
    for (int k = 1; k <= rim_samples; ++k) {
        const double t1 = two_pi * k / rim_samples;
        const bool cur = rim(t1);
        if (cur == prev_rim) continue;
        double lo = two_pi * (k - 1) / rim_samples, hi = t1;
        for (int it = 0; it < 50; ++it) {
            const double mid = 0.5 * (lo + hi);
            (rim(mid) == prev_rim ? lo : hi) = mid;
        }
        brk.push_back(0.5 * (lo + hi));
        prev_rim = cur;
    }
    std::sort(brk.begin(), brk.end());

    auto radial = [&](double theta) {
        const Point2 u{std::cos(theta), std::sin(theta)};
        const double rho = ray_hit(x, u, obs, r_s);
        auto at = [&](double r) { return member({x.x + r * u.x, x.y + r * u.y}, spec); };
        const int n = std::max(2, static_cast<int>(std::ceil(rho * opt.scan_per_meter)));
        std::vector<double> cuts{0.0};
        bool prev = at(0.0);
        const bool first = prev;
        double r_prev = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double r = rho * k / n;
            const bool cur = at(std::min(r, rho * (1 - 1e-14)));
            if (cur != prev) {
                double lo = r_prev, hi = r;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (at(mid) == prev ? lo : hi) = mid;
                }
                cuts.push_back(0.5 * (lo + hi));
                prev = cur;
            }
            r_prev = r;
        }
        cuts.push_back(rho);
        double sum = 0.0;
        bool on = first;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k, on = !on) {
            if (!on) continue;
            const double a = cuts[k], b = cuts[k + 1];
            const double h = 0.5 * (b - a), c = 0.5 * (a + b);
            for (std::size_t g = 0; g < kGl6x.size(); ++g) {
                const double r = c + h * kGl6x[g];
                sum += kGl6w[g] * h * r * mmacov::evaluate_priority(prio, {x.x + r * u.x, x.y + r * u.y});
            }
        }
        return sum;
    };

    double total = 0.0;
    for (std::size_t k = 0; k + 1 < brk.size(); ++k) {
        const double a = brk[k], b = brk[k + 1];
        if (b - a < 1e-14) continue;
        const double h = 0.5 * (b - a), c = 0.5 * (a + b);
        for (std::size_t g = 0; g < kGl4x.size(); ++g) total += kGl4w[g] * h * radial(c + h * kGl4x[g]);
    }
    return total;
}

/// Central differences of -polar_coverage, i.e. the gradient of F.
inline Point2 fd_gradient(const Point2& x, double r_s, const mmacov::RegionSpec& spec, double h = 1e-3,
                          const PolarOptions& opt = {}) {
    const double fxp = polar_coverage({x.x + h, x.y}, r_s, spec, opt);
    const double fxm = polar_coverage({x.x - h, x.y}, r_s, spec, opt);
    const double fyp = polar_coverage({x.x, x.y + h}, r_s, spec, opt);
    const double fym = polar_coverage({x.x, x.y - h}, r_s, spec, opt);
    return {-(fxp - fxm) / (2 * h), -(fyp - fym) / (2 * h)};
}

}  // namespace oracle
