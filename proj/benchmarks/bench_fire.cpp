#include <benchmark/benchmark.h>

#include "../tests/support/worlds.hpp"
#include "wildroute/fire_sim.hpp"
#include "wildroute/scenario.hpp"

using namespace wildroute;

namespace {

void BM_StepFire(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RoadGrid grid(n, n, CellClass::Good);
  FireParams params;
  params.spread_probability = 0.3;
  params.wind_speed = 1.0;
  params.source_x = params.source_y = n / 2.0;
  params.initial_radius = 4;
  params.radius_growth = 0.25;
  params.num_steps = 1 << 30;
  FireState fire = init_fire(params, grid, 7);
  for (auto _ : state) step_fire(fire, grid, params);
}
BENCHMARK(BM_StepFire)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

void BM_CorridorScenario(benchmark::State& state) {
  const RoadGrid grid = testing::corridor_map();
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(grid, testing::corridor_blocked(seed++)));
}
BENCHMARK(BM_CorridorScenario)->Unit(benchmark::kMillisecond);

}  // namespace
