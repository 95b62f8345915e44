#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wildroute {

/// Cell coordinate. x is the column (+x right), y is the row (+y down).
struct Coord {
  int x = 0;
  int y = 0;

  friend bool operator==(Coord, Coord) = default;
  // Row-major order: compare rows first.
  friend std::strong_ordering operator<=>(Coord a, Coord b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

enum class CellClass : std::uint8_t { Impassable = 0, Good = 1, Poor = 2 };

const char* to_string(CellClass c);

enum class MoveKind : std::uint8_t { Cardinal, Diagonal };

struct Neighbor {
  Coord at;
  MoveKind kind;
};

/// Fixed-capacity list of up to eight neighbors, no heap traffic.
class NeighborList {
 public:
  void push(Neighbor n) { items_[size_++] = n; }
  std::size_t size() const { return size_; }
  const Neighbor& operator[](std::size_t i) const { return items_[i]; }
  const Neighbor* begin() const { return items_.data(); }
  const Neighbor* end() const { return items_.data() + size_; }

 private:
  std::array<Neighbor, 8> items_{};
  std::size_t size_ = 0;
};

/// Road-network raster. Classes are fixed once constructed.
class RoadGrid {
 public:
  RoadGrid(int width, int height, std::vector<CellClass> cells);
  RoadGrid(int width, int height, CellClass fill);

  /// Builds a grid from rows of '#' (Impassable), 'G' (Good) and 'P' (Poor).
  static RoadGrid from_rows(const std::vector<std::string>& rows);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return cells_.size(); }

  bool contains(Coord c) const { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }
  std::size_t index(Coord c) const {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.x);
  }
  Coord coord(std::size_t index) const {
    return {static_cast<int>(index % static_cast<std::size_t>(width_)),
            static_cast<int>(index / static_cast<std::size_t>(width_))};
  }

  CellClass at(Coord c) const { return cells_[index(c)]; }
  const std::vector<CellClass>& cells() const { return cells_; }

  friend bool operator==(const RoadGrid&, const RoadGrid&) = default;

 private:
  int width_;
  int height_;
  std::vector<CellClass> cells_;
};

/// Dense burning-cell set over a grid's extent. Out-of-bounds queries are never burning.
class BurnMask {
 public:
  BurnMask() = default;
  BurnMask(int width, int height)
      : width_(width), height_(height), bits_(static_cast<std::size_t>(width) * height, 0) {}

  int width() const { return width_; }
  int height() const { return height_; }

  bool burning(Coord c) const {
    if (c.x < 0 || c.y < 0 || c.x >= width_ || c.y >= height_) return false;
    return bits_[idx(c)] != 0;
  }
  void ignite(Coord c) { bits_[idx(c)] = 1; }

  std::size_t count() const;
  /// Burning cells in row-major order.
  std::vector<Coord> cells() const;
  /// Every cell within Chebyshev distance `margin` of a burning cell.
  BurnMask dilated(int margin) const;
  bool is_subset_of(const BurnMask& other) const;

  friend bool operator==(const BurnMask&, const BurnMask&) = default;

 private:
  std::size_t idx(Coord c) const {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(c.x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct ClassCosts {
  double cardinal;
  double diagonal;
  double d1;  // heuristic weight per straight cell
  double d2;  // heuristic weight per diagonal cell
};

/// Per-class step costs and heuristic weights. Impassable has no entry.
struct CostModel {
  ClassCosts good{1.0, 1.4, 1.0, 1.4};
  ClassCosts poor{100.0, 140.0, 100.0, 140.0};
  int safety_margin = 0;

  const ClassCosts& of(CellClass c) const { return c == CellClass::Poor ? poor : good; }

  /// Throws std::invalid_argument when a cost ordering invariant is broken.
  void validate() const;
};

/// Eight in-bounds neighbors, clockwise from north.
NeighborList neighbors8(const RoadGrid& grid, Coord c);

/// Cost of entering `to` with the given move, or nullopt when the cell is blocked
/// (impassable, burning, or within safety_margin of a burning cell).
std::optional<double> step_cost(const CostModel& model, const RoadGrid& grid,
                                const BurnMask& burning, Coord to, MoveKind kind);

}  // namespace wildroute
