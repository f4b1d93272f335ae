#include "mmacov/field.hpp"

#include <algorithm>
#include <cmath>

namespace mmacov {

double evaluate_priority(const PrioritySpec& spec, const Point2& q) {
    if (std::holds_alternative<UniformPriority>(spec)) return 1.0;
    double sum = 0.0;
    for (const auto& t : std::get<GaussianSumPriority>(spec).terms) {
        sum += t.weight * std::exp(-t.alpha * distance2(q, t.center));
    }
    return sum;
}

FieldModel::FieldModel(double width, double height, std::vector<PolygonObstacle> obstacles,
                       PrioritySpec priority)
    : width_(width), height_(height), obstacles_(std::move(obstacles)), priority_(std::move(priority)) {
    if (!(width_ > 0.0) || !std::isfinite(width_)) throw ValidationError("field.width_m", "must be > 0");
    if (!(height_ > 0.0) || !std::isfinite(height_)) throw ValidationError("field.height_m", "must be > 0");

    if (const auto* g = std::get_if<GaussianSumPriority>(&priority_)) {
        if (g->terms.empty()) throw ValidationError("field.priority.terms", "needs at least one term");
        for (const auto& t : g->terms) {
            if (!(t.weight > 0.0) || !std::isfinite(t.weight)) {
                throw ValidationError("field.priority.terms.weight", "must be > 0");
            }
            if (!(t.alpha >= 0.0) || !std::isfinite(t.alpha)) {
                throw ValidationError("field.priority.terms.alpha_per_m2", "must be >= 0");
            }
            if (!t.center.finite()) throw ValidationError("field.priority.terms.center_m", "must be finite");
        }
    }

    double obstacle_area = 0.0;
    for (std::size_t k = 0; k < obstacles_.size(); ++k) {
        const auto& poly = obstacles_[k];
        for (const auto& v : poly.vertices()) {
            if (!in_bounds(v)) {
                throw ValidationError("field.obstacles[" + poly.id() + "]", "vertex outside field bounds");
            }
        }
        obstacle_area += poly.signed_area();
        for (std::size_t m = 0; m < k; ++m) {
            const auto& other = obstacles_[m];
            if (!poly.bounds().overlaps(other.bounds())) continue;
            bool overlap = false;
            for (std::size_t a = 0; a < poly.size() && !overlap; ++a) {
                for (std::size_t b = 0; b < other.size() && !overlap; ++b) {
                    overlap = segments_intersect(poly.edge(a), other.edge(b));
                }
            }
            overlap = overlap || point_in_polygon(poly.vertex(0), other) ||
                      point_in_polygon(other.vertex(0), poly);
            if (overlap) {
                throw ValidationError("field.obstacles[" + poly.id() + "]",
                                      "overlaps obstacle '" + other.id() + "'");
            }
        }
    }
    if (obstacle_area >= width_ * height_ - kGeomTol) {
        throw ValidationError("field.obstacles", "no free space left");
    }
}

bool FieldModel::in_free_space(const Point2& q) const {
    if (!in_bounds(q)) return false;
    for (const auto& poly : obstacles_) {
        if (point_in_polygon(q, poly)) return false;
    }
    return true;
}

double FieldModel::priority_at(const Point2& q) const {
    if (!in_free_space(q)) throw std::domain_error("priority queried outside free space");
    return evaluate_priority(priority_, q);
}

IntegrationGrid::IntegrationGrid(const FieldModel& field, double resolution) : resolution_(resolution) {
    if (!(resolution > 0.0) || !std::isfinite(resolution)) {
        throw ValidationError("resolution_per_m", "must be > 0");
    }
    nx_ = static_cast<int>(std::ceil(field.width() * resolution - 1e-9));
    ny_ = static_cast<int>(std::ceil(field.height() * resolution - 1e-9));
}

IntegrationGrid::Range IntegrationGrid::cells_in(const BoundingBox& box) const {
    auto lo = [&](double v, int n) { return std::clamp(static_cast<int>(std::floor(v * resolution_ - 0.5)), 0, n); };
    auto hi = [&](double v, int n) { return std::clamp(static_cast<int>(std::floor(v * resolution_ - 0.5)) + 2, 0, n); };
    return {lo(box.min_x, nx_), hi(box.max_x, nx_), lo(box.min_y, ny_), hi(box.max_y, ny_)};
}

double weighted_field_area(const FieldModel& field, double resolution) {
    const IntegrationGrid grid(field, resolution);
    double sum = 0.0;
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            const Point2 c = grid.center(i, j);
            if (field.in_free_space(c)) sum += evaluate_priority(field.priority(), c);
        }
    }
    return sum * grid.cell_area();
}

}  // namespace mmacov
