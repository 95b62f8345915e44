// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "worlds.hpp"
#include "wildroute/planner.hpp"
#include "wildroute/raster_io.hpp"
#include "wildroute/scenario.hpp"

using namespace wildroute;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- Criteria 1 and 2 share the same 500 random worlds ----------------------

struct RandomQuery {
  RoadGrid grid;
  BurnMask fire;
  Coord start, goal;
};

std::vector<RandomQuery> random_queries() {
  std::vector<RandomQuery> out;
  RngStream rng(0x5EED0001);
  while (out.size() < 500) {
    RoadGrid grid = testing::random_grid(rng, 64, 64, 0.3, 0.2);
    BurnMask fire = testing::random_fire(rng, 64, 64, 3, 6.0);
    const auto s = testing::random_open_cell(rng, grid, fire);
    const auto t = testing::random_open_cell(rng, grid, fire);
    if (!s || !t) continue;
    out.push_back({std::move(grid), std::move(fire), *s, *t});
  }
  return out;
}

std::string path_problem(const RandomQuery& q, const PlanResult& r) {
  if (r.path.empty() || r.path.front() != q.start || r.path.back() != q.goal) return "bad endpoints";
  for (Coord c : r.path)
    if (q.fire.burning(c)) return "path crosses a burning cell";
  const auto cost = path_cost(q.grid, q.fire, r.path, CostModel{});
  if (!cost) return "path has a blocked or non-adjacent step";
  if (std::abs(*cost - r.total_cost) > 1e-9) return "cost re-sum mismatch";
  return "";
}

Verdict ac1_oracle_equivalence(const std::vector<RandomQuery>& queries) {
  Verdict v;
  PlannerConfig cfg;
  cfg.heuristic_mode = HeuristicMode::Admissible;
  const auto t0 = Clock::now();
  int solved = 0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const auto& q = queries[i];
    const auto a = plan(q.grid, q.fire, q.start, q.goal, cfg);
    const auto o = dijkstra_oracle(q.grid, q.fire, q.start, q.goal, CostModel{});
    v.require(a.has_value() == o.has_value(), "reachability differs on grid " + std::to_string(i));
    if (a && o) {
      ++solved;
      v.require(std::abs(a->total_cost - o->total_cost) <= 1e-9,
                "cost differs on grid " + std::to_string(i));
    }
  }
  const double secs = seconds_since(t0);
  v.require(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  if (v.ok) v.detail = std::to_string(solved) + " solved / 500 grids, " + std::to_string(secs) + " s";
  return v;
}

Verdict ac2_paper_mode_soundness(const std::vector<RandomQuery>& queries) {
  Verdict v;
  const PlannerConfig cfg;  // paper heuristic
  int solved = 0, suboptimal = 0;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    const auto& q = queries[i];
    const auto p = plan(q.grid, q.fire, q.start, q.goal, cfg);
    const auto o = dijkstra_oracle(q.grid, q.fire, q.start, q.goal, CostModel{});
    v.require(p.has_value() == o.has_value(), "reachability differs on grid " + std::to_string(i));
    if (!p || !o) continue;
    ++solved;
    const std::string problem = path_problem(q, *p);
    v.require(problem.empty(), problem + " on grid " + std::to_string(i));
    v.require(p->total_cost >= o->total_cost - 1e-9, "paper cost below oracle on grid " + std::to_string(i));
    suboptimal += p->total_cost > o->total_cost + 1e-9;
  }
  if (v.ok)
    v.detail = std::to_string(solved) + " valid paper-mode paths, " + std::to_string(suboptimal) +
               " strictly costlier than the oracle";
  return v;
}

// --- Criteria 3 and 4: static vs dynamic on the corridor fixture -----------

Verdict ac3_fire_clear_of_route() {
  Verdict v;
  const RoadGrid grid = testing::corridor_map();
  const CompareReport rep = compare_static_dynamic(grid, testing::corridor_clear(1));
  v.require(rep.static_plan.has_value(), "no static plan");
  if (!v.ok) return v;
  v.require(rep.dynamic_trace.outcome == Outcome::Escaped, "dynamic run did not escape");
  v.require(rep.dynamic_trace.executed_path == rep.static_plan->path, "paths differ");
  v.require(rep.dynamic_executed_cost() == *rep.static_cost(), "costs differ");
  if (v.ok) v.detail = "both costs " + std::to_string(*rep.static_cost());
  return v;
}

// Replays the fire independently and reports whether any entered cell was burning
// at the tick the agent entered it.
bool trajectory_touches_fire(const RoadGrid& grid, const ScenarioConfig& cfg, const ScenarioTrace& trace) {
  FireState fire = init_fire(cfg.fire, grid, cfg.seed);
  if (fire.is_burning(cfg.start)) return true;
  std::size_t walked = 1;
  for (const TickRecord& rec : trace.records) {
    if (fire.tick < cfg.fire.num_steps) step_fire(fire, grid, cfg.fire);
    for (int i = 0; i < rec.moved; ++i)
      if (fire.is_burning(trace.executed_path[walked++])) return true;
  }
  return false;
}

Verdict ac4_fire_on_route() {
  Verdict v;
  const RoadGrid grid = testing::corridor_map();
  double min_ratio = std::numeric_limits<double>::infinity();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ScenarioConfig cfg = testing::corridor_blocked(seed);
    const CompareReport rep = compare_static_dynamic(grid, cfg);
    const std::string tag = " (seed " + std::to_string(seed) + ")";
    v.require(rep.static_plan.has_value(), "no static plan" + tag);
    if (!rep.static_plan) continue;
    v.require(rep.dynamic_executed_cost() > *rep.static_cost(), "dynamic cost not above static" + tag);
    v.require(!trajectory_touches_fire(grid, cfg, rep.dynamic_trace), "trajectory entered fire" + tag);
    min_ratio = std::min(min_ratio, rep.dynamic_executed_cost() / *rep.static_cost());
  }
  if (v.ok) v.detail = "100 seeds, min dynamic/static cost ratio " + std::to_string(min_ratio);
  return v;
}

// --- Criterion 5: fire-model laws -------------------------------------------

Verdict ac5_fire_laws() {
  Verdict v;
  {
    const RoadGrid grid(96, 96, CellClass::Good);
    FireParams p;
    p.spread_probability = 0.15;
    p.wind_speed = 0.6;
    p.wind_direction_deg = 45.0;
    p.source_x = p.source_y = 20.0;
    p.initial_radius = 2.0;
    p.radius_growth = 0.1;
    p.num_steps = 200;
    FireState s = init_fire(p, grid, 17);
    for (int t = 0; t < 200; ++t) {
      const BurnMask before = s.burning;
      step_fire(s, grid, p);
      v.require(before.is_subset_of(s.burning), "burning set shrank at tick " + std::to_string(t + 1));
    }
  }
  {
    const RoadGrid grid(32, 32, CellClass::Good);
    FireParams p;
    p.wind_jitter_deg = 0.0;
    p.radius_growth = 0.0;
    p.source_x = 10.0;
    p.source_y = 12.0;
    p.initial_radius = 3.0;
    p.num_steps = 50;
    FireState s = init_fire(p, grid, 3);
    const BurnMask start = s.burning;
    for (int t = 0; t < 50; ++t) step_fire(s, grid, p);
    v.require(s.burning == start, "p=0/s=0/g=0 is not a fixed point");
  }
  {
    const RoadGrid grid(41, 41, CellClass::Good);
    FireParams p;
    p.spread_probability = 1.0;
    p.radius_growth = 0.0;
    p.source_x = p.source_y = 20.0;
    p.num_steps = 15;
    FireState s = init_fire(p, grid, 4);
    for (int t = 1; t <= 15; ++t) {
      const BurnMask before = s.burning;
      step_fire(s, grid, p);
      v.require(s.burning == before.dilated(1), "p=1 tick " + std::to_string(t) + " is not a one-ring closure");
    }
  }
  {
    // 8 candidates per single-tick trial around a point source.
    const RoadGrid grid(9, 9, CellClass::Good);
    FireParams p;
    p.spread_probability = 0.5;
    p.radius_growth = 0.0;
    p.source_x = p.source_y = 4.0;
    p.num_steps = 1;
    const int trials = 10000;
    double sum = 0, sum_sq = 0;
    for (int seed = 0; seed < trials; ++seed) {
      FireState s = init_fire(p, grid, static_cast<std::uint64_t>(seed));
      step_fire(s, grid, p);
      const double ignited = static_cast<double>(s.burning.count() - 1);
      sum += ignited;
      sum_sq += ignited * ignited;
    }
    const double mean = sum / trials;
    const double var = (sum_sq - trials * mean * mean) / (trials - 1);
    const double se = std::sqrt(var / trials);
    const double rate = mean / 8.0;
    v.require(std::abs(mean - 4.0) <= 3.0 * se,
              "ignition rate " + std::to_string(rate) + " outside 3 SE of 0.5");
    if (v.ok) {
      std::ostringstream os;
      os << "ignition rate " << rate << " (|z| = " << std::abs(mean - 4.0) / se << ")";
      v.detail = os.str();
    }
  }
  return v;
}

// --- Criterion 6: determinism -------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict ac6_determinism() {
  Verdict v;
  const fs::path dir = fs::temp_directory_path() / "wildroute_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_ppm(dir / "map.ppm", image_from_grid(testing::corridor_map()));
  std::ofstream(dir / "cfg.json") << R"({
    "map": "map.ppm", "start": [2, 15], "goal": [57, 15],
    "fire": {"x": 30, "y": 15, "radius": 3, "spread_probability": 0.2, "wind_speed": 0.5,
             "wind_direction_deg": 90, "radius_growth": 0.2},
    "sim": {"num_steps": 60, "seed": 11}
  })";
  for (const char* out : {"a", "b"}) {
    const std::string cmd = std::string("\"") + WILDROUTE_CLI_PATH + "\" simulate --frames --config \"" +
                            (dir / "cfg.json").string() + "\" --out-dir \"" + (dir / out).string() +
                            "\" > /dev/null";
    v.require(std::system(cmd.c_str()) == 0, "simulate failed");
  }
  if (!v.ok) return v;
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir / "a")) {
    const auto name = entry.path().filename();
    v.require(fs::exists(dir / "b" / name), "missing " + name.string() + " in second run");
    v.require(slurp(entry.path()) == slurp(dir / "b" / name), name.string() + " differs");
    ++files;
  }
  v.require(files > 3, "too few outputs");

  // Golden fire trace from the independent Python reference (tests/oracles).
  const RoadGrid grid(16, 12, CellClass::Good);
  FireParams p;
  p.spread_probability = 0.35;
  p.wind_speed = 0.75;
  p.wind_direction_deg = 30.0;
  p.source_x = 4.5;
  p.source_y = 5.0;
  p.initial_radius = 1.5;
  p.radius_growth = 0.5;
  p.num_steps = 8;
  const char* golden_hashes[] = {"6ca474d9e6b8e071", "ff3ff12d4bd06911", "641a7fe08ebf50e3",
                                 "4ceec1cd9a911ff1", "d25c334ad45fbcda", "70caae7bf13efa51",
                                 "f683edb9fcda157f", "7561246aae931922"};
  for (int run = 0; run < 2; ++run) {
    FireState s = init_fire(p, grid, 2024);
    for (const char* hash : golden_hashes) {
      step_fire(s, grid, p);
      const std::string line = golden_line(s);
      v.require(line.substr(line.size() - 16) == hash, "golden hash mismatch at tick " + std::to_string(s.tick));
    }
  }
  if (v.ok) v.detail = std::to_string(files) + " output files identical; 8 golden hashes match";
  return v;
}

// --- Criterion 7: performance -------------------------------------------------

struct BigWorld {
  RoadGrid grid;
  Coord start{0, 0}, goal{511, 511};
};

BigWorld big_world() {
  RngStream rng(0xB16);
  std::vector<CellClass> cells = testing::random_grid(rng, 512, 512, 0.3, 0.2).cells();
  cells.front() = cells.back() = CellClass::Good;
  return {RoadGrid(512, 512, std::move(cells))};
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  return xs[xs.size() / 2];
}

Verdict ac7_performance() {
  Verdict v;
  const BigWorld w = big_world();
  const BurnMask none(512, 512);
  std::vector<double> plan_ms;
  for (int i = 0; i < 5; ++i) {
    const auto t0 = Clock::now();
    const auto r = plan(w.grid, none, w.start, w.goal, PlannerConfig{});
    plan_ms.push_back(seconds_since(t0) * 1e3);
    v.require(r.has_value(), "512x512 query found no path");
  }

  ScenarioConfig sc;
  sc.start = w.start;
  sc.goal = w.goal;
  sc.seed = 99;
  sc.max_ticks = 100;
  sc.fire.source_x = 300.0;
  sc.fire.source_y = 200.0;
  sc.fire.initial_radius = 8.0;
  sc.fire.spread_probability = 0.3;
  sc.fire.wind_speed = 1.0;
  sc.fire.wind_direction_deg = 135.0;
  sc.fire.radius_growth = 0.5;
  sc.fire.num_steps = 100;
  std::vector<double> scenario_s;
  int planned_ticks = 0;
  for (int i = 0; i < 3; ++i) {
    const auto t0 = Clock::now();
    const ScenarioTrace trace = run_scenario(w.grid, sc);
    scenario_s.push_back(seconds_since(t0));
    planned_ticks = static_cast<int>(trace.records.size());
  }
  v.require(planned_ticks == 100, "scenario ran " + std::to_string(planned_ticks) + " ticks, expected 100");
  const double p_ms = median(plan_ms), s_s = median(scenario_s);
  v.require(p_ms <= 50.0, "512x512 plan took " + std::to_string(p_ms) + " ms");
  v.require(s_s <= 2.0, "100-tick scenario took " + std::to_string(s_s) + " s");
  if (v.ok) {
    std::ostringstream os;
    os << "plan " << p_ms << " ms (median of 5), 100-tick scenario " << s_s << " s (median of 3)";
    v.detail = os.str();
  }
  return v;
}

// --- Criteria 8 and 9: hand values ------------------------------------------

Verdict ac8_heuristic_values() {
  Verdict v;
  const PlannerConfig paper;
  const double good = heuristic(paper, {0, 0}, {3, 2}, CellClass::Good);
  const double poor = heuristic(paper, {0, 0}, {3, 2}, CellClass::Poor);
  v.require(good == 3.8, "Good value " + format_real(good));
  v.require(poor == 380.0, "Poor value " + format_real(poor));
  v.require(heuristic(paper, {4, 4}, {4, 4}, CellClass::Poor) == 0.0, "h(goal) != 0");
  if (v.ok) v.detail = "3.8 and 380";
  return v;
}

Verdict ac9_ndvi() {
  Verdict v;
  BandRaster nir(3, 1), red(3, 1);
  nir.samples = {0.8, 0.4, 0.0};
  red.samples = {0.2, 0.4, 0.0};
  const BandRaster out = ndvi(nir, red);
  // (0.8 - 0.2) / (0.8 + 0.2) is 0.6000000000000001 in binary64; allow 2 ulp.
  v.require(std::abs(out.samples[0] - 0.6) <= 2 * std::numeric_limits<double>::epsilon() * 0.6,
            "NDVI(0.8, 0.2) = " + format_real(out.samples[0]));
  v.require(out.samples[1] == 0.0, "NDVI(0.4, 0.4) != 0");
  v.require(out.samples[2] == 0.0, "NDVI(0, 0) != 0");

  const RoadGrid grid = RoadGrid::from_rows({"GPG", "#P#"});
  BandRaster idx(3, 2);
  idx.samples = {0.6, 0.1, 0.3, 0.9, 0.2999, -1.0};
  const RoadGrid w = weight_roads_by_ndvi(grid, idx, 0.3);
  const RoadGrid expect = RoadGrid::from_rows({"PGP", "#G#"});
  v.require(w == expect, "tau=0.3 reclassification table mismatch");
  if (v.ok) v.detail = "0.6 / 0.0 / 0.0 and reclassification table";
  return v;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<RandomQuery> queries = random_queries();

  struct Criterion {
    const char* name;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1 oracle equivalence (admissible A* == Dijkstra, 500 grids, < 30 s)",
       [&] { return ac1_oracle_equivalence(queries); }},
      {"AC2 paper-mode soundness (valid, >= oracle, no burning cells)",
       [&] { return ac2_paper_mode_soundness(queries); }},
      {"AC3 fire clear of route: identical static and dynamic paths and costs", ac3_fire_clear_of_route},
      {"AC4 fire on route: dynamic > static, no fire contact, 100 seeds", ac4_fire_on_route},
      {"AC5 fire-model laws", ac5_fire_laws},
      {"AC6 determinism (CLI byte-identical outputs, golden hashes)", ac6_determinism},
      {"AC7 performance (512x512 plan <= 50 ms, 100-tick scenario <= 2 s)", ac7_performance},
      {"AC8 heuristic hand values", ac8_heuristic_values},
      {"AC9 NDVI values and reclassification", ac9_ndvi},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %s -- %s\n", v.ok ? "PASS" : "FAIL", c.name, v.detail.c_str());
    failed += !v.ok;
  }
  std::printf("%d/%zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
