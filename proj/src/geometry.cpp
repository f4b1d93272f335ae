#include "mmacov/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmacov {

namespace {

BoundingBox bounds_of(std::span<const Point2> pts) {
    BoundingBox box{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
    for (const auto& p : pts) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

bool on_segment(const Point2& q, const Segment& s) {
    return point_segment_distance(q, s) <= kGeomTol;
}

int sign_with_tol(double v, double scale) {
    if (v > kGeomTol * scale) return 1;
    if (v < -kGeomTol * scale) return -1;
    return 0;
}

// Parameters t in [0, 1] along p->p+r at which the segment touches edge e.
void touch_params(const Point2& p, const Point2& r, double r_len, const Segment& e,
                  std::vector<double>& out) {
    const Point2 s = e.b - e.a;
    const double s_len = s.norm();
    const double denom = cross(r, s);
    const Point2 qp = e.a - p;
    if (std::abs(denom) > kGeomTol * r_len * s_len) {
        const double t = cross(qp, s) / denom;
        const double u = cross(qp, r) / denom;
        const double dt = kGeomTol / r_len;
        const double du = s_len > 0.0 ? kGeomTol / s_len : 0.0;
        if (t >= -dt && t <= 1.0 + dt && u >= -du && u <= 1.0 + du) {
            out.push_back(std::clamp(t, 0.0, 1.0));
        }
        return;
    }
    // Parallel: only collinear overlap matters.
    if (std::abs(cross(qp, r)) > kGeomTol * r_len) return;
    const double r2 = r.norm2();
    for (const Point2& v : {e.a, e.b}) {
        const double t = dot(v - p, r) / r2;
        if (t >= 0.0 && t <= 1.0) out.push_back(t);
    }
}

}  // namespace

PolygonObstacle::PolygonObstacle(std::string id, std::vector<Point2> vertices)
    : id_(std::move(id)), vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
        throw std::invalid_argument("obstacle '" + id_ + "' needs at least 3 vertices");
    }
    for (const auto& v : vertices_) {
        if (!v.finite()) throw std::invalid_argument("obstacle '" + id_ + "' has a non-finite vertex");
    }
    if (std::abs(mmacov::signed_area(vertices_)) <= kGeomTol) {
        throw std::invalid_argument("obstacle '" + id_ + "' has zero area");
    }
    if (!is_simple(vertices_)) {
        throw std::invalid_argument("obstacle '" + id_ + "' is not a simple polygon");
    }
    if (mmacov::signed_area(vertices_) < 0.0) std::reverse(vertices_.begin(), vertices_.end());
    bounds_ = bounds_of(vertices_);
}

double PolygonObstacle::signed_area() const { return mmacov::signed_area(vertices_); }

double signed_area(std::span<const Point2> ring) {
    double a = 0.0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        a += cross(ring[i], ring[(i + 1) % ring.size()]);
    }
    return 0.5 * a;
}

bool is_simple(std::span<const Point2> ring) {
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Segment ei{ring[i], ring[(i + 1) % n]};
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            const Segment ej{ring[j], ring[(j + 1) % n]};
            if (adjacent) {
                // Adjacent edges may only share their common vertex.
                const Point2 shared = (j == i + 1) ? ring[j] : ring[i];
                const Point2 far_i = (j == i + 1) ? ei.a : ei.b;
                const Point2 far_j = (j == i + 1) ? ej.b : ej.a;
                if (orientation(far_i, shared, far_j) == 0 &&
                    dot(far_i - shared, far_j - shared) > 0.0) {
                    return false;
                }
                continue;
            }
            if (segments_intersect(ei, ej)) return false;
        }
    }
    return true;
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    const Point2 ab = b - a;
    const Point2 ac = c - a;
    return sign_with_tol(cross(ab, ac), std::max({ab.norm(), ac.norm(), 1.0}));
}

double point_segment_distance(const Point2& q, const Segment& s) {
    const Point2 d = s.b - s.a;
    const double len2 = d.norm2();
    if (len2 == 0.0) return distance(q, s.a);
    const double t = std::clamp(dot(q - s.a, d) / len2, 0.0, 1.0);
    return distance(q, s.a + d * t);
}

bool segments_intersect(const Segment& a, const Segment& b) {
    const int o1 = orientation(a.a, a.b, b.a);
    const int o2 = orientation(a.a, a.b, b.b);
    const int o3 = orientation(b.a, b.b, a.a);
    const int o4 = orientation(b.a, b.b, a.b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(b.a, a) || on_segment(b.b, a) || on_segment(a.a, b) || on_segment(a.b, b);
}

bool on_polygon_boundary(const Point2& q, const PolygonObstacle& poly) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (on_segment(q, poly.edge(i))) return true;
    }
    return false;
}

bool point_in_polygon(const Point2& q, const PolygonObstacle& poly) {
    const BoundingBox& box = poly.bounds();
    if (q.x <= box.min_x || q.x >= box.max_x || q.y <= box.min_y || q.y >= box.max_y) return false;
    if (on_polygon_boundary(q, poly)) return false;
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2& a = poly.vertex(i);
        const Point2& b = poly.vertex(j);
        if ((a.y > q.y) != (b.y > q.y)) {
            const double xc = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (q.x < xc) inside = !inside;
        }
    }
    return inside;
}

bool is_visible(const Point2& x, const Point2& q, std::span<const PolygonObstacle> obstacles) {
    if (obstacles.empty()) return true;
    const Point2 r = q - x;
    const double r_len = r.norm();
    if (r_len <= kGeomTol) return true;
    const BoundingBox seg_box{std::min(x.x, q.x), std::min(x.y, q.y), std::max(x.x, q.x),
                              std::max(x.y, q.y)};
    thread_local std::vector<double> ts;
    for (const auto& poly : obstacles) {
        if (!seg_box.overlaps(poly.bounds())) continue;
        ts.clear();
        for (std::size_t i = 0; i < poly.size(); ++i) touch_params(x, r, r_len, poly.edge(i), ts);
        if (ts.empty()) continue;
        ts.push_back(0.0);
        ts.push_back(1.0);
        std::sort(ts.begin(), ts.end());
        for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
            if ((ts[k + 1] - ts[k]) * r_len <= kGeomTol) continue;
            if (point_in_polygon(x + r * (0.5 * (ts[k] + ts[k + 1])), poly)) return false;
        }
    }
    return true;
}

std::vector<ShadowVertex> shadow_vertices(const Point2& x, double sensing_radius,
                                          std::span<const PolygonObstacle> obstacles) {
    std::vector<ShadowVertex> out;
    for (const auto& poly : obstacles) {
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2& v = poly.vertex(i);
            const Point2 d = v - x;
            const double dist = d.norm();
            if (dist <= kGeomTol || dist >= sensing_radius - kGeomTol) continue;
            const Point2& prev = poly.vertex(i + n - 1);
            const Point2& next = poly.vertex(i + 1);
            const int sp = sign_with_tol(cross(d, prev - v), dist * (prev - v).norm());
            const int sn = sign_with_tol(cross(d, next - v), dist * (next - v).norm());
            int side = 0;
            if (sp != 0 && sp == sn) {
                side = sp;
            } else if (sp == 0 && sn != 0 && dot(prev - v, d) < 0.0) {
                side = sn;  // incoming edge runs along the ray from the sensor side
            } else if (sn == 0 && sp != 0 && dot(next - v, d) < 0.0) {
                side = sp;
            }
            if (side == 0) continue;
            if (!is_visible(x, v, obstacles)) continue;
            ShadowVertex sv;
            sv.vertex = v;
            sv.distance_to_sensor = dist;
            sv.outward_unit = d / dist;
            sv.segment_length = sensing_radius - dist;
            sv.lit_side = -side;
            out.push_back(sv);
        }
    }
    return out;
}

}  // namespace mmacov
