#pragma once

#include <cstddef>
#include <string>

#include "mmacov/simulation.hpp"

namespace mmacov {

struct SvgOptions {
    double px_per_meter = 20.0;  // 1 px = 0.05 m
};

/// Renders the field, obstacles and sensor disks as of round `last`. When first < last,
/// mobile-sensor trajectories over rounds [first, last] are drawn as polylines.
/// Output is a pure function of its inputs.
std::string render_svg(const SimulationTrace& trace, std::size_t first, std::size_t last,
                       const SvgOptions& options = {});

}  // namespace mmacov
