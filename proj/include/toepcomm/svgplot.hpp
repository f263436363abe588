#pragma once

#include <string>

#include "toepcomm/symbol.hpp"

namespace toepcomm {

struct PlotConfig {
    int curve_nodes = 4096;
    int raster = 200;      // raster cells per axis
    double padding = 0.1;  // bounding-box padding fraction
    int canvas = 640;      // SVG pixel size
};

// SVG document with the image curve polyline over an image-plane raster
// colored by integer winding: 0 white, 1 light, 2 medium, >= 3 dark,
// on-curve cells gray. Output is deterministic for a fixed config.
std::string winding_plot_svg(const TaylorSymbol& s, const PlotConfig& cfg = {});

}  // namespace toepcomm
