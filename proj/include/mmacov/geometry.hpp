#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace mmacov {

/// Absolute tolerance (meters) for point equality and on-boundary tests.
inline constexpr double kGeomTol = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2 operator+(const Point2& o) const { return {x + o.x, y + o.y}; }
    constexpr Point2 operator-(const Point2& o) const { return {x - o.x, y - o.y}; }
    constexpr Point2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Point2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Point2 operator-() const { return {-x, -y}; }
    Point2& operator+=(const Point2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr bool operator==(const Point2&) const = default;

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Point2 operator*(double s, const Point2& p) { return p * s; }
constexpr double dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }
constexpr double distance2(const Point2& a, const Point2& b) { return (a - b).norm2(); }
/// Counter-clockwise rotation by 90 degrees.
constexpr Point2 perp(const Point2& v) { return {-v.y, v.x}; }

struct Segment {
    Point2 a;
    Point2 b;
};

struct BoundingBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    bool overlaps(const BoundingBox& o) const {
        return min_x <= o.max_x + kGeomTol && o.min_x <= max_x + kGeomTol &&
               min_y <= o.max_y + kGeomTol && o.min_y <= max_y + kGeomTol;
    }
};

/// Simple polygon with counter-clockwise vertices. Its boundary is free space.
class PolygonObstacle {
public:
    PolygonObstacle() = default;
    PolygonObstacle(std::string id, std::vector<Point2> vertices);

    const std::string& id() const { return id_; }
    std::span<const Point2> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
    Segment edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }
    const BoundingBox& bounds() const { return bounds_; }
    /// Positive for counter-clockwise orientation.
    double signed_area() const;

private:
    std::string id_;
    std::vector<Point2> vertices_;
    BoundingBox bounds_;
};

double signed_area(std::span<const Point2> ring);
/// True when no two non-adjacent edges of the ring touch.
bool is_simple(std::span<const Point2> ring);

/// Orientation of c relative to a->b: +1 left, -1 right, 0 collinear within tolerance.
int orientation(const Point2& a, const Point2& b, const Point2& c);
double point_segment_distance(const Point2& q, const Segment& s);

/// Closed-segment intersection; collinear overlap and shared endpoints count.
bool segments_intersect(const Segment& a, const Segment& b);

/// Strict interior test. Points within kGeomTol of the boundary are outside.
bool point_in_polygon(const Point2& q, const PolygonObstacle& poly);
bool on_polygon_boundary(const Point2& q, const PolygonObstacle& poly);

/// True when the open segment x-q does not pass through any obstacle interior.
/// Grazing an edge or a vertex is visible.
bool is_visible(const Point2& x, const Point2& q, std::span<const PolygonObstacle> obstacles);

/// Obstacle vertex whose silhouette casts a radial shadow boundary into a sensing disk.
struct ShadowVertex {
    Point2 vertex;
    double distance_to_sensor = 0.0;  // R_v
    Point2 outward_unit;              // (v - x) / R_v
    double segment_length = 0.0;      // r_s - R_v
    /// +1 when the unobstructed side of the radial segment lies counter-clockwise of
    /// outward_unit, -1 otherwise.
    int lit_side = 1;
};

std::vector<ShadowVertex> shadow_vertices(const Point2& x, double sensing_radius,
                                          std::span<const PolygonObstacle> obstacles);

}  // namespace mmacov
