#include <benchmark/benchmark.h>

#include "../tests/support/worlds.hpp"
#include "wildroute/planner.hpp"

using namespace wildroute;

namespace {

struct World {
  RoadGrid grid;
  BurnMask fire;
  Coord start, goal;
};

World make_world_once(RngStream& rng, int n) {
  World w{testing::random_grid(rng, n, n), BurnMask(n, n), {0, 0}, {n - 1, n - 1}};
  w.fire = testing::random_fire(rng, n, n, 6, n / 16.0);
  // Clear the query endpoints.
  std::vector<CellClass> cells = w.grid.cells();
  cells.front() = cells.back() = CellClass::Good;
  w.grid = RoadGrid(n, n, std::move(cells));
  BurnMask fire(n, n);
  for (Coord c : w.fire.cells())
    if (c != w.start && c != w.goal) fire.ignite(c);
  w.fire = fire;
  return w;
}

// First seeded world whose corner-to-corner query is solvable.
World make_world(int n) {
  RngStream rng(0xB0BA);
  for (;;) {
    World w = make_world_once(rng, n);
    if (dijkstra_oracle(w.grid, w.fire, w.start, w.goal, CostModel{})) return w;
  }
}

void BM_PlanPaper(benchmark::State& state) {
  const World w = make_world(static_cast<int>(state.range(0)));
  PlannerConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(plan(w.grid, w.fire, w.start, w.goal, cfg));
}
BENCHMARK(BM_PlanPaper)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_PlanAdmissible(benchmark::State& state) {
  const World w = make_world(static_cast<int>(state.range(0)));
  PlannerConfig cfg;
  cfg.heuristic_mode = HeuristicMode::Admissible;
  for (auto _ : state) benchmark::DoNotOptimize(plan(w.grid, w.fire, w.start, w.goal, cfg));
}
BENCHMARK(BM_PlanAdmissible)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_DijkstraOracle(benchmark::State& state) {
  const World w = make_world(static_cast<int>(state.range(0)));
  const CostModel model;
  for (auto _ : state) benchmark::DoNotOptimize(dijkstra_oracle(w.grid, w.fire, w.start, w.goal, model));
}
BENCHMARK(BM_DijkstraOracle)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
