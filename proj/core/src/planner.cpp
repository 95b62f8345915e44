#include "wildroute/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>

namespace wildroute {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();

void check_query(const RoadGrid& grid, const BurnMask& burning, Coord start, Coord goal) {
  auto str = [](Coord c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; };
  if (!grid.contains(start)) throw InvalidQuery("start " + str(start) + " outside grid");
  if (!grid.contains(goal)) throw InvalidQuery("goal " + str(goal) + " outside grid");
  if (grid.at(start) == CellClass::Impassable) throw InvalidQuery("start " + str(start) + " is impassable");
  if (burning.burning(start)) throw InvalidQuery("start " + str(start) + " is burning");
}

std::vector<Coord> unwind(const RoadGrid& grid, const std::vector<std::uint32_t>& parent,
                          std::size_t goal_idx) {
  std::vector<Coord> path;
  for (std::uint32_t i = static_cast<std::uint32_t>(goal_idx); i != kNoParent; i = parent[i])
    path.push_back(grid.coord(i));
  std::reverse(path.begin(), path.end());
  return path;
}

struct OpenEntry {
  double f;
  double g;
  std::uint64_t seq;
  std::uint32_t idx;
};

}  // namespace

double heuristic(const PlannerConfig& config, Coord n, Coord goal, CellClass class_of_n) {
  const ClassCosts& w = config.heuristic_mode == HeuristicMode::Paper
                            ? config.cost_model.of(class_of_n)
                            : config.cost_model.good;
  const double dx = std::abs(n.x - goal.x);
  const double dy = std::abs(n.y - goal.y);
  return w.d1 * std::max(dx, dy) + (w.d2 - w.d1) * std::min(dx, dy);
}

std::optional<PlanResult> plan(const RoadGrid& grid, const BurnMask& burning, Coord start,
                               Coord goal, const PlannerConfig& config) {
  check_query(grid, burning, start, goal);

  // Fold the safety margin into the mask once instead of per step.
  CostModel model = config.cost_model;
  const BurnMask blocked = burning.dilated(model.safety_margin);
  model.safety_margin = 0;

  const std::size_t n = grid.size();
  std::vector<double> g(n, kInf);
  std::vector<std::uint32_t> parent(n, kNoParent);
  std::vector<std::uint8_t> closed(n, 0);

  const bool fifo = config.tie_break == TieBreak::Fifo;
  auto worse = [fifo](const OpenEntry& a, const OpenEntry& b) {
    if (a.f != b.f) return a.f > b.f;
    if (fifo) return a.seq > b.seq;
    if (a.g != b.g) return a.g < b.g;
    return a.idx > b.idx;
  };
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, decltype(worse)> open(worse);
  std::uint64_t seq = 0;

  const auto start_idx = static_cast<std::uint32_t>(grid.index(start));
  const auto goal_idx = grid.index(goal);
  g[start_idx] = 0.0;
  open.push({heuristic(config, start, goal, grid.at(start)), 0.0, seq++, start_idx});

  std::size_t expanded = 0;
  while (!open.empty()) {
    const OpenEntry top = open.top();
    open.pop();
    if (closed[top.idx] || top.g != g[top.idx]) continue;  // stale
    closed[top.idx] = 1;
    ++expanded;
    if (top.idx == goal_idx) {
      return PlanResult{unwind(grid, parent, goal_idx), g[goal_idx], expanded};
    }
    const Coord here = grid.coord(top.idx);
    for (const Neighbor& nb : neighbors8(grid, here)) {
      const auto ni = static_cast<std::uint32_t>(grid.index(nb.at));
      if (closed[ni]) continue;
      const auto cost = step_cost(model, grid, blocked, nb.at, nb.kind);
      if (!cost) continue;
      const double ng = top.g + *cost;
      if (ng < g[ni]) {
        g[ni] = ng;
        parent[ni] = top.idx;
        open.push({ng + heuristic(config, nb.at, goal, grid.at(nb.at)), ng, seq++, ni});
      }
    }
  }
  return std::nullopt;
}

std::optional<PlanResult> dijkstra_oracle(const RoadGrid& grid, const BurnMask& burning,
                                          Coord start, Coord goal, const CostModel& cost_model) {
  check_query(grid, burning, start, goal);

  const std::size_t n = grid.size();
  std::vector<double> dist(n, kInf);
  std::vector<std::uint32_t> parent(n, kNoParent);
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;

  const auto s = static_cast<std::uint32_t>(grid.index(start));
  const auto t = grid.index(goal);
  dist[s] = 0.0;
  pq.push({0.0, s});
  std::size_t settled = 0;
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    ++settled;
    if (u == t) return PlanResult{unwind(grid, parent, t), d, settled};
    for (const Neighbor& nb : neighbors8(grid, grid.coord(u))) {
      const auto c = step_cost(cost_model, grid, burning, nb.at, nb.kind);
      if (!c) continue;
      const auto v = static_cast<std::uint32_t>(grid.index(nb.at));
      if (d + *c < dist[v]) {
        dist[v] = d + *c;
        parent[v] = u;
        pq.push({dist[v], v});
      }
    }
  }
  return std::nullopt;
}

std::optional<double> path_cost(const RoadGrid& grid, const BurnMask& burning,
                                const std::vector<Coord>& path, const CostModel& cost_model) {
  double total = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const Coord a = path[i - 1], b = path[i];
    const int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
    if (std::max(dx, dy) != 1 || !grid.contains(b)) return std::nullopt;
    const auto c = step_cost(cost_model, grid, burning, b,
                             dx && dy ? MoveKind::Diagonal : MoveKind::Cardinal);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

}  // namespace wildroute
