#include "wildroute/grid.hpp"

#include <algorithm>

namespace wildroute {

const char* to_string(CellClass c) {
  switch (c) {
    case CellClass::Impassable: return "impassable";
    case CellClass::Good: return "good";
    case CellClass::Poor: return "poor";
  }
  return "?";
}

RoadGrid::RoadGrid(int width, int height, std::vector<CellClass> cells)
    : width_(width), height_(height), cells_(std::move(cells)) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid dimensions must be positive");
  if (cells_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("grid cell count does not match dimensions");
}

RoadGrid::RoadGrid(int width, int height, CellClass fill)
    : RoadGrid(width, height,
               std::vector<CellClass>(static_cast<std::size_t>(std::max(width, 0)) *
                                          static_cast<std::size_t>(std::max(height, 0)),
                                      fill)) {}

RoadGrid RoadGrid::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("no rows");
  const auto w = rows.front().size();
  std::vector<CellClass> cells;
  cells.reserve(w * rows.size());
  for (const auto& row : rows) {
    if (row.size() != w) throw std::invalid_argument("ragged rows");
    for (char ch : row) {
      switch (ch) {
        case '#': cells.push_back(CellClass::Impassable); break;
        case 'G': cells.push_back(CellClass::Good); break;
        case 'P': cells.push_back(CellClass::Poor); break;
        default: throw std::invalid_argument(std::string("bad cell symbol '") + ch + "'");
      }
    }
  }
  return RoadGrid(static_cast<int>(w), static_cast<int>(rows.size()), std::move(cells));
}

std::size_t BurnMask::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Coord> BurnMask::cells() const {
  std::vector<Coord> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) {
      out.push_back({static_cast<int>(i % static_cast<std::size_t>(width_)),
                     static_cast<int>(i / static_cast<std::size_t>(width_))});
    }
  }
  return out;
}

BurnMask BurnMask::dilated(int margin) const {
  if (margin <= 0) return *this;
  // Separable Chebyshev dilation: rows then columns.
  BurnMask rows(width_, height_);
  for (int y = 0; y < height_; ++y) {
    int last = -1;  // most recent burning x
    for (int x = 0; x < width_; ++x) {
      if (burning({x, y})) last = x;
      if (last >= 0 && x - last <= margin) rows.ignite({x, y});
    }
    last = -1;
    for (int x = width_ - 1; x >= 0; --x) {
      if (burning({x, y})) last = x;
      if (last >= 0 && last - x <= margin) rows.ignite({x, y});
    }
  }
  BurnMask out(width_, height_);
  for (int x = 0; x < width_; ++x) {
    int last = -1;
    for (int y = 0; y < height_; ++y) {
      if (rows.burning({x, y})) last = y;
      if (last >= 0 && y - last <= margin) out.ignite({x, y});
    }
    last = -1;
    for (int y = height_ - 1; y >= 0; --y) {
      if (rows.burning({x, y})) last = y;
      if (last >= 0 && last - y <= margin) out.ignite({x, y});
    }
  }
  return out;
}

bool BurnMask::is_subset_of(const BurnMask& other) const {
  if (width_ != other.width_ || height_ != other.height_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

void CostModel::validate() const {
  for (const ClassCosts* c : {&good, &poor}) {
    if (!(c->cardinal > 0 && c->diagonal > 0 && c->d1 > 0 && c->d2 > 0))
      throw std::invalid_argument("costs must be strictly positive");
    if (!(c->diagonal > c->cardinal)) throw std::invalid_argument("diagonal cost must exceed cardinal");
    if (!(c->d2 > c->d1)) throw std::invalid_argument("d2 must exceed d1");
  }
  if (safety_margin < 0) throw std::invalid_argument("safety_margin must be >= 0");
}

NeighborList neighbors8(const RoadGrid& grid, Coord c) {
  if (!grid.contains(c)) throw std::out_of_range("neighbors8: coordinate outside grid");
  static constexpr std::array<std::array<int, 2>, 8> kOffsets{
      {{0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}}};
  NeighborList out;
  for (const auto& [dx, dy] : kOffsets) {
    const Coord n{c.x + dx, c.y + dy};
    if (!grid.contains(n)) continue;
    out.push({n, (dx != 0 && dy != 0) ? MoveKind::Diagonal : MoveKind::Cardinal});
  }
  return out;
}

std::optional<double> step_cost(const CostModel& model, const RoadGrid& grid,
                                const BurnMask& burning, Coord to, MoveKind kind) {
  const CellClass cls = grid.at(to);
  if (cls == CellClass::Impassable) return std::nullopt;
  const int m = model.safety_margin;
  for (int dy = -m; dy <= m; ++dy)
    for (int dx = -m; dx <= m; ++dx)
      if (burning.burning({to.x + dx, to.y + dy})) return std::nullopt;
  const ClassCosts& costs = model.of(cls);
  return kind == MoveKind::Diagonal ? costs.diagonal : costs.cardinal;
}

}  // namespace wildroute
