#pragma once

#include <cstdint>
#include <vector>

#include "mmacov/field.hpp"
#include "mmacov/network.hpp"

namespace mmacov {

/// Grid integral of the priority over the uncovered part of a region intersected with a
/// sensing disk centred at an arbitrary point. The region part of the membership test
/// does not depend on the disk centre, so it is cached per cell; repeated evaluations
/// during a line search only pay for distance and line-of-sight checks.
class LocalCoverage {
public:
    LocalCoverage(RegionSpec spec, double resolution);

    /// -F(x): weighted area of cells in the uncovered region, within r_s of x and visible from x.
    double operator()(const Point2& x, double sensing_radius) const;

    const RegionSpec& spec() const { return spec_; }
    const IntegrationGrid& grid() const { return grid_; }

private:
    bool uncovered(int i, int j) const;

    RegionSpec spec_;
    IntegrationGrid grid_;
    IntegrationGrid::Range box_;
    mutable std::vector<std::int8_t> mask_;  // -1 unknown, 0 outside, 1 inside
};

double local_weighted_coverage(const Point2& x, double sensing_radius, const RegionSpec& spec,
                               double resolution);

/// Grid integral of the priority over free-space cells sensed by at least one sensor.
double overall_weighted_coverage(const NetworkSnapshot& snapshot, double resolution);

double coverage_factor(const NetworkSnapshot& snapshot, double resolution);
/// Same as above with a precomputed weighted_field_area at the same resolution.
double coverage_factor(const NetworkSnapshot& snapshot, double resolution, double field_area);

}  // namespace mmacov
