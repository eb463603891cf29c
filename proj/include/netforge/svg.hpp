#pragma once

#include "netforge/netpoints.hpp"

#include <string>

namespace netforge {

struct PlotOptions {
    bool grid = false;   // b-adic gridlines at resolutions 1..m
    bool boxes = false;  // outline each point's weight-m containing intervals
};

// Deterministic SVG 1.1 of the first two axes. The 512x512 viewport maps a
// viewBox in numerator units (side b^g), so every coordinate is an integer.
// Each point is drawn as its resolution-m box, filled black.
std::string render_svg(const NetPoints& points, int m, const PlotOptions& options);

}  // namespace netforge
