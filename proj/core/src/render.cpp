#include "wildroute/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wildroute {

namespace {

void fill_cell(RasterRgb& img, int scale, Coord c, Rgb color) {
  for (int py = c.y * scale; py < (c.y + 1) * scale; ++py)
    for (int px = c.x * scale; px < (c.x + 1) * scale; ++px) img.set(px, py, color);
}

template <typename Fn>
void for_cells_in_disc(const RoadGrid& grid, double cx, double cy, double r, Fn&& fn) {
  const int y0 = std::max(0, static_cast<int>(std::floor(cy - r)));
  const int y1 = std::min(grid.height() - 1, static_cast<int>(std::ceil(cy + r)));
  const int x0 = std::max(0, static_cast<int>(std::floor(cx - r)));
  const int x1 = std::min(grid.width() - 1, static_cast<int>(std::ceil(cx + r)));
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x)
      if ((x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r) fn(Coord{x, y});
}

}  // namespace

RasterRgb render_frame(const RoadGrid& grid, const FireState* fire,
                       const std::vector<std::vector<Coord>>& paths, Coord start, Coord goal,
                       const RenderStyle& style) {
  if (style.scale < 1) throw std::invalid_argument("render scale must be >= 1");
  const int s = style.scale;
  RasterRgb img(grid.width() * s, grid.height() * s, style.background);

  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      switch (grid.at({x, y})) {
        case CellClass::Impassable: break;
        case CellClass::Good: fill_cell(img, s, {x, y}, style.good); break;
        case CellClass::Poor: fill_cell(img, s, {x, y}, style.poor); break;
      }
    }
  }

  if (fire) {
    for (Coord c : fire->burning.cells()) fill_cell(img, s, c, style.fire);
    for_cells_in_disc(grid, fire->source_x, fire->source_y, fire->disc_radius,
                      [&](Coord c) { fill_cell(img, s, c, style.fire); });
  }

  for (const auto& path : paths)
    for (Coord c : path)
      if (grid.contains(c)) fill_cell(img, s, c, style.path);

  for (auto [at, color] : {std::pair{start, style.start}, std::pair{goal, style.goal}}) {
    for_cells_in_disc(grid, at.x, at.y, style.marker_radius,
                      [&](Coord c) { fill_cell(img, s, c, color); });
  }
  return img;
}

}  // namespace wildroute
