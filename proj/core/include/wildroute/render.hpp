#pragma once

#include <vector>

#include "wildroute/fire_sim.hpp"
#include "wildroute/raster_io.hpp"

namespace wildroute {

struct RenderStyle {
  int scale = 4;  // pixels per cell
  Rgb background{0, 0, 0};
  Rgb good{0, 255, 0};
  Rgb poor{255, 255, 255};
  Rgb fire{255, 0, 0};
  Rgb path{255, 165, 0};
  Rgb start{0, 0, 255};
  Rgb goal{255, 255, 0};
  int marker_radius = 2;  // cells

  /// Same palette with the path drawn red, as in the original figures.
  static RenderStyle paper() {
    RenderStyle s;
    s.path = {255, 0, 0};
    return s;
  }
};

/// Draw order: terrain, burning cells and source disc, paths, start/goal markers.
/// `fire` may be null for a fire-free frame.
RasterRgb render_frame(const RoadGrid& grid, const FireState* fire,
                       const std::vector<std::vector<Coord>>& paths, Coord start, Coord goal,
                       const RenderStyle& style);

}  // namespace wildroute
