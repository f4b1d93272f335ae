#pragma once

#include "mmacov/coverage.hpp"
#include "mmacov/geometry.hpp"
#include "mmacov/network.hpp"

namespace mmacov {

struct GradientConfig {
    int n_perimeter = 360;  // samples on the sensing-disk perimeter
    int n_radial = 64;      // samples per shadow segment
    double epsilon = 0.1;   // m^2, minimum local improvement to accept a move
    double step_tolerance = 0.01;  // m
    int max_line_search_evals = 24;
    double resolution = 10.0;      // integration samples per meter
    double gradient_floor = 1e-6;  // below this the sensor is stationary

    void validate() const;
};

struct SensorStepResult {
    bool moved = false;
    Point2 new_position;
    double coverage_before = 0.0;
    double coverage_after = 0.0;  // at the evaluated candidate, whether or not it was accepted
    Point2 gradient;  // of F = -local coverage
    double alpha = 0.0;  // meters along the descent direction
};

// The two boundary sums below are written for the covered integral -F (they point
// towards coverage gain). total_gradient flips the sign to return the gradient of F.

/// Perimeter integral of phi*n over the arcs of the sensing circle that lie in the uncovered
/// region and in line of sight of x, from n_perimeter samples plus bisected arc endpoints.
Point2 gradient_disk_term(const Point2& x, double sensing_radius, const RegionSpec& spec,
                          int n_perimeter);

/// Radial-segment sum for one shadow vertex. Always orthogonal to sv.outward_unit.
Point2 gradient_shadow_term(const Point2& x, const ShadowVertex& sv, const RegionSpec& spec,
                            int n_radial);

/// Gradient of F(x) = -(local weighted coverage). Region, static-disk and obstacle-edge
/// boundaries do not move with x and contribute nothing.
Point2 total_gradient(const Point2& x, double sensing_radius, const RegionSpec& spec,
                      const GradientConfig& cfg);

/// Largest t such that x + t*u lies in the region with an obstacle-free segment, scanning
/// from x along unit direction u.
double feasible_extent(const Point2& x, const Point2& u, const RegionSpec& spec, double step_tolerance);

/// Golden-section minimisation of F along p over the feasible prefix. Returns the step
/// length in meters along p/|p|, or 0 when no feasible step beyond step_tolerance helps.
double line_search(const Point2& x, const Point2& p, double sensing_radius, const LocalCoverage& coverage,
                   const GradientConfig& cfg);
double line_search(const Point2& x, const Point2& p, double sensing_radius, const RegionSpec& spec,
                   const GradientConfig& cfg);

/// Candidate is feasible when it is in the region and reachable from x_current on a
/// straight obstacle-free line.
bool is_feasible_move(const Point2& x_current, const Point2& candidate, const RegionSpec& spec);

/// Returns candidate when feasible, otherwise a feasible point on [x_current, candidate]
/// located by bisection to step_tolerance. x_current must itself be feasible.
Point2 project_candidate(const Point2& x_current, const Point2& candidate, const RegionSpec& spec,
                         double step_tolerance);

/// One MMA decision for a mobile sensor against a round-start snapshot.
SensorStepResult mma_step(const Sensor& sensor, const NetworkSnapshot& snapshot, const GradientConfig& cfg);

}  // namespace mmacov
