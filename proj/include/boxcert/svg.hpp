#pragma once

#include <string>

#include "boxcert/geometry.hpp"
#include "boxcert/pipeline.hpp"

namespace boxcert {

struct RenderSpec {
  int scale = 10;  // pixels per unit, >= 1
  bool show_trail = true;
  bool show_labels = true;
};

/// Byte-stable SVG of a 2D partition, y axis pointing up. With a
/// certificate, overlays the trail and marks the Y points on the certified
/// side. Throws RenderUnsupported unless p.dim == 2.
std::string render_svg(const Partition& p, const Certificate* cert, const RenderSpec& spec);

}  // namespace boxcert
