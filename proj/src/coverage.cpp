#include "mmacov/coverage.hpp"

#include <algorithm>
#include <cmath>

namespace mmacov {

namespace {

BoundingBox disk_box(const Point2& c, double r) { return {c.x - r, c.y - r, c.x + r, c.y + r}; }

}  // namespace

LocalCoverage::LocalCoverage(RegionSpec spec, double resolution)
    : spec_(std::move(spec)), grid_(*spec_.field, resolution) {
    const double reach = std::min(spec_.reach(), std::hypot(spec_.field->width(), spec_.field->height()));
    box_ = grid_.cells_in(disk_box(spec_.owner.position, reach));
    const auto w = static_cast<std::size_t>(std::max(box_.i1 - box_.i0, 0));
    const auto h = static_cast<std::size_t>(std::max(box_.j1 - box_.j0, 0));
    mask_.assign(w * h, -1);
}

bool LocalCoverage::uncovered(int i, int j) const {
    if (i < box_.i0 || i >= box_.i1 || j < box_.j0 || j >= box_.j1) return false;
    auto& m = mask_[static_cast<std::size_t>(j - box_.j0) * (box_.i1 - box_.i0) + (i - box_.i0)];
    if (m < 0) m = in_region_uncovered(grid_.center(i, j), spec_) ? 1 : 0;
    return m == 1;
}

double LocalCoverage::operator()(const Point2& x, double sensing_radius) const {
    const IntegrationGrid::Range r = grid_.cells_in(disk_box(x, sensing_radius));
    const double r2 = sensing_radius * sensing_radius;
    const auto& obstacles = spec_.obstacles();
    const auto& priority = spec_.field->priority();
    double sum = 0.0;
    for (int j = r.j0; j < r.j1; ++j) {
        for (int i = r.i0; i < r.i1; ++i) {
            const Point2 c = grid_.center(i, j);
            if (distance2(c, x) > r2) continue;
            if (!uncovered(i, j)) continue;
            if (!is_visible(x, c, obstacles)) continue;
            sum += evaluate_priority(priority, c);
        }
    }
    return sum * grid_.cell_area();
}

double local_weighted_coverage(const Point2& x, double sensing_radius, const RegionSpec& spec,
                               double resolution) {
    return LocalCoverage(spec, resolution)(x, sensing_radius);
}

double overall_weighted_coverage(const NetworkSnapshot& snapshot, double resolution) {
    const FieldModel& field = *snapshot.field;
    const IntegrationGrid grid(field, resolution);
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(grid.nx()) * grid.ny(), 0);
    for (const auto& s : snapshot.sensors) {
        const double r2 = s.sensing_radius * s.sensing_radius;
        const auto r = grid.cells_in(disk_box(s.position, s.sensing_radius));
        for (int j = r.j0; j < r.j1; ++j) {
            for (int i = r.i0; i < r.i1; ++i) {
                auto& cell = covered[static_cast<std::size_t>(j) * grid.nx() + i];
                if (cell) continue;
                const Point2 c = grid.center(i, j);
                if (distance2(c, s.position) > r2) continue;
                if (!is_visible(s.position, c, field.obstacles())) continue;
                cell = 1;
            }
        }
    }
    double sum = 0.0;
    for (int j = 0; j < grid.ny(); ++j) {
        for (int i = 0; i < grid.nx(); ++i) {
            if (!covered[static_cast<std::size_t>(j) * grid.nx() + i]) continue;
            const Point2 c = grid.center(i, j);
            if (field.in_free_space(c)) sum += evaluate_priority(field.priority(), c);
        }
    }
    return sum * grid.cell_area();
}

double coverage_factor(const NetworkSnapshot& snapshot, double resolution, double field_area) {
    if (!(field_area > 0.0)) throw ValidationError("field", "weighted field area must be > 0");
    return overall_weighted_coverage(snapshot, resolution) / field_area;
}

double coverage_factor(const NetworkSnapshot& snapshot, double resolution) {
    return coverage_factor(snapshot, resolution, weighted_field_area(*snapshot.field, resolution));
}

}  // namespace mmacov
