#pragma once

#include <string>

#include "euclid/workspace.hpp"

namespace euclid {

struct SvgStyle {
  double width_px = 640.0;
  double point_radius_px = 2.0;
  double font_px = 11.0;
  bool show_hidden = false;  // draw macro-internal objects (names starting '_')
};

// Renders the workspace in insertion order. The viewBox is the bounding box of
// points, circles and arcs grown by a 5% margin on every side; lines are
// clipped to it. World y points up.
std::string render_svg(const Workspace& ws, const SvgStyle& style = {});

}  // namespace euclid
