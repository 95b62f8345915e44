#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wildroute/fire_sim.hpp"
#include "wildroute/planner.hpp"

namespace wildroute {

class ScenarioError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ScenarioConfig {
  std::string map;  // source path of the road raster, kept for reporting
  FireParams fire;
  std::uint64_t seed = 0;
  Coord start;
  Coord goal;
  int agent_speed = 5;  // cells per tick
  int max_ticks = 1000;
  PlannerConfig planner;
  bool fire_enabled = true;
};

enum class Outcome { Escaped, Overtaken, Trapped, TimedOut };

const char* to_string(Outcome o);

struct TickRecord {
  int tick = 0;
  Coord agent;                                     // position after this tick's move
  std::optional<std::vector<Coord>> planned_path;  // nullopt: no path this tick
  std::optional<double> plan_cost;
  std::size_t burning_count = 0;
  int moved = 0;
};

struct ScenarioTrace {
  std::vector<TickRecord> records;
  Outcome outcome = Outcome::TimedOut;
  double executed_cost = 0.0;
  std::vector<Coord> executed_path;
  std::uint64_t seed = 0;
  int ticks = 0;
};

/// Called once before the first tick (tick 0) and after every tick.
using TickObserver = std::function<void(const TickRecord*, const FireState&)>;

/// Per tick: advance the fire, stop if the agent's cell burns, replan from the agent,
/// then walk up to agent_speed cells of the fresh plan. With fire disabled a single
/// plan is computed on the first tick and followed to the end.
ScenarioTrace run_scenario(const RoadGrid& grid, const ScenarioConfig& config,
                           const TickObserver& observer = {});

struct CompareReport {
  std::optional<PlanResult> static_plan;
  ScenarioTrace static_trace;
  ScenarioTrace dynamic_trace;

  std::optional<double> static_cost() const {
    return static_plan ? std::optional(static_plan->total_cost) : std::nullopt;
  }
  double dynamic_executed_cost() const { return dynamic_trace.executed_cost; }
};

/// Runs the same config with the fire off and on. `dynamic_observer` sees the fire-on run.
CompareReport compare_static_dynamic(const RoadGrid& grid, const ScenarioConfig& config,
                                     const TickObserver& dynamic_observer = {});

/// One JSON object per tick record followed by {outcome, executed_cost, ticks, seed}.
std::string trace_to_jsonl(const ScenarioTrace& trace);
std::string summary_json(const ScenarioTrace& trace);
std::string compare_report_json(const CompareReport& report);

}  // namespace wildroute
