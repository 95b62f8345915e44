#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wildroute/grid.hpp"

namespace wildroute {

/// `Paper` picks d1/d2 from the evaluated node's class, so Poor cells inflate the
/// estimate a hundredfold. `Admissible` always uses the Good-class weights.
enum class HeuristicMode { Paper, Admissible };

/// Ordering among open entries with equal f.
enum class TieBreak { PreferLargerG, Fifo };

struct PlannerConfig {
  CostModel cost_model;
  HeuristicMode heuristic_mode = HeuristicMode::Paper;
  TieBreak tie_break = TieBreak::PreferLargerG;
};

/// Open-list entry. f == g + h.
struct SearchNode {
  Coord coord;
  double g = 0.0;
  double h = 0.0;
  double f = 0.0;
  std::optional<Coord> parent;
};

struct PlanResult {
  std::vector<Coord> path;  // start..goal inclusive
  double total_cost = 0.0;
  std::size_t expanded = 0;
};

/// Raised for queries that cannot start: start outside the grid, impassable or burning.
/// An unreachable goal is not an error; it yields an empty optional.
class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double heuristic(const PlannerConfig& config, Coord n, Coord goal, CellClass class_of_n);

/// Weighted A*. Returns nullopt when no path exists.
std::optional<PlanResult> plan(const RoadGrid& grid, const BurnMask& burning, Coord start,
                               Coord goal, const PlannerConfig& config);

/// Uniform-cost search over the same step costs; the reference for optimal cost.
std::optional<PlanResult> dijkstra_oracle(const RoadGrid& grid, const BurnMask& burning,
                                          Coord start, Coord goal, const CostModel& cost_model);

/// Sum of step costs along `path`, or nullopt when a step is blocked or not 8-adjacent.
std::optional<double> path_cost(const RoadGrid& grid, const BurnMask& burning,
                                const std::vector<Coord>& path, const CostModel& cost_model);

}  // namespace wildroute
