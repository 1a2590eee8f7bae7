// SVG drawing of a surface and, optionally, a packing on it.
#pragma once

#include <optional>
#include <string>

#include "tsurf/circle.hpp"

namespace tsurf {

struct RenderOptions {
  double width = 640.0;  // pixels; height follows the aspect ratio
  bool tangencies = true;
  double tol = kDefaultTol;
};

/// Polygons are `path.polygon`, paired edges `line.edge` sharing a `pair-k`
/// class, circle pieces `path.sector` (or `circle.disk` for a whole disk)
/// inside one `g.circle` per circle, tangency points `circle.tangency`.
std::string render_svg(const SurfaceSpec& spec, const Packing* packing = nullptr,
                       const RenderOptions& options = {});

}  // namespace tsurf
