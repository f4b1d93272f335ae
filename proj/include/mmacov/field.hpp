#pragma once

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mmacov/geometry.hpp"

namespace mmacov {

/// Scenario or model input that violates a documented invariant. `field()` names the
/// offending input.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct UniformPriority {};

struct GaussianTerm {
    Point2 center;
    double alpha = 0.0;   // 1/m^2
    double weight = 1.0;  // dimensionless
};

struct GaussianSumPriority {
    std::vector<GaussianTerm> terms;
};

using PrioritySpec = std::variant<UniformPriority, GaussianSumPriority>;

/// Evaluates the priority function without any domain check.
double evaluate_priority(const PrioritySpec& spec, const Point2& q);

/// Axis-aligned rectangle [0, width] x [0, height] minus obstacle interiors.
class FieldModel {
public:
    FieldModel(double width, double height, std::vector<PolygonObstacle> obstacles = {},
               PrioritySpec priority = UniformPriority{});

    double width() const { return width_; }
    double height() const { return height_; }
    const std::vector<PolygonObstacle>& obstacles() const { return obstacles_; }
    const PrioritySpec& priority() const { return priority_; }

    bool in_bounds(const Point2& q) const {
        return q.x >= -kGeomTol && q.x <= width_ + kGeomTol && q.y >= -kGeomTol &&
               q.y <= height_ + kGeomTol;
    }
    bool in_free_space(const Point2& q) const;
    /// Priority at q; throws std::domain_error when q is outside free space.
    double priority_at(const Point2& q) const;

private:
    double width_;
    double height_;
    std::vector<PolygonObstacle> obstacles_;
    PrioritySpec priority_;
};

/// Cell-centred sampling grid anchored at the field origin. Every integral in the
/// library uses the same cell centres for a given resolution, so local and global
/// sums count identical cells.
class IntegrationGrid {
public:
    IntegrationGrid(const FieldModel& field, double resolution);

    double resolution() const { return resolution_; }
    double cell_size() const { return 1.0 / resolution_; }
    double cell_area() const { return 1.0 / (resolution_ * resolution_); }
    int nx() const { return nx_; }
    int ny() const { return ny_; }
    Point2 center(int i, int j) const {
        return {(i + 0.5) / resolution_, (j + 0.5) / resolution_};
    }

    struct Range {
        int i0, i1, j0, j1;  // inclusive-exclusive, may be empty
    };
    /// Cells whose centres may fall in the box.
    Range cells_in(const BoundingBox& box) const;

private:
    double resolution_;
    int nx_;
    int ny_;
};

/// Grid integral of the priority over free space.
double weighted_field_area(const FieldModel& field, double resolution);

}  // namespace mmacov
