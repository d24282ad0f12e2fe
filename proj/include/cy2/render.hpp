#pragma once

#include <string>

#include "cy2/geometry_a.hpp"
#include "cy2/geometry_d.hpp"

namespace cy2 {

struct RenderStyle {
  int size = 480;  // pixels, square canvas
  std::string green = "#2a9d2a";
  std::string red = "#d0342c";
  std::string ink = "#222222";
};

/// Polygon on the unit circle, vertex 1 at the top, labels running clockwise.
std::string render_svg(const DiagonalSet& u, const RenderStyle& style = {});
/// Green diameters straight, red ones dashed; each pair draws both arcs.
std::string render_svg(const ArcSetD& u, const RenderStyle& style = {});

}  // namespace cy2
