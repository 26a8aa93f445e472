#pragma once

#include <string>

#include "simplewedge/report.hpp"

namespace swedge {

/// Byte-stable SVG drawing of a configuration.  Every spanned line is a
/// chord across the view box (class "ln", plus "simple" for simple lines),
/// every point a circle (class "pt", plus "apex" for wedge apexes).  The
/// view box is the bounding box grown by 5% on each side; y points up.
std::string render_svg(const Configuration& config, const AnalysisReport& report);

}  // namespace swedge
