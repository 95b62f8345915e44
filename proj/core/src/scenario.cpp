#include "wildroute/scenario.hpp"

#include <algorithm>

#include <json.hpp>

namespace wildroute {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Escaped: return "Escaped";
    case Outcome::Overtaken: return "Overtaken";
    case Outcome::Trapped: return "Trapped";
    case Outcome::TimedOut: return "TimedOut";
  }
  return "?";
}

namespace {

void validate(const RoadGrid& grid, const ScenarioConfig& cfg) {
  if (cfg.agent_speed < 1) throw ScenarioError("agent_speed must be >= 1");
  if (cfg.max_ticks < 1) throw ScenarioError("max_ticks must be >= 1");
  if (!grid.contains(cfg.start)) throw ScenarioError("start outside grid");
  if (!grid.contains(cfg.goal)) throw ScenarioError("goal outside grid");
  if (grid.at(cfg.start) == CellClass::Impassable) throw ScenarioError("start is impassable");
  try {
    cfg.planner.cost_model.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(e.what());
  }
}

MoveKind move_kind(Coord a, Coord b) {
  return (a.x != b.x && a.y != b.y) ? MoveKind::Diagonal : MoveKind::Cardinal;
}

}  // namespace

ScenarioTrace run_scenario(const RoadGrid& grid, const ScenarioConfig& config,
                           const TickObserver& observer) {
  validate(grid, config);

  FireState fire;
  if (config.fire_enabled) {
    try {
      fire = init_fire(config.fire, grid, config.seed);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(e.what());
    }
  } else {
    fire.burning = BurnMask(grid.width(), grid.height());
    fire.rng = RngStream(config.seed);
  }
  if (fire.is_burning(config.start)) throw ScenarioError("start is burning at tick 0");

  const CostModel& costs = config.planner.cost_model;
  ScenarioTrace trace;
  trace.seed = config.seed;
  trace.executed_path.push_back(config.start);
  Coord agent = config.start;
  if (observer) observer(nullptr, fire);

  if (agent == config.goal) {
    trace.outcome = Outcome::Escaped;
    return trace;
  }

  std::optional<PlanResult> static_plan;
  std::size_t static_pos = 0;  // agent's index along static_plan
  bool last_no_path = false;

  for (int tick = 1; tick <= config.max_ticks; ++tick) {
    if (config.fire_enabled && fire.tick < config.fire.num_steps) step_fire(fire, grid, config.fire);

    TickRecord rec;
    rec.tick = tick;
    rec.burning_count = fire.burning.count();

    if (fire.is_burning(agent)) {
      rec.agent = agent;
      trace.records.push_back(rec);
      trace.ticks = tick;
      trace.outcome = Outcome::Overtaken;
      if (observer) observer(&trace.records.back(), fire);
      return trace;
    }

    std::optional<std::vector<Coord>> path;
    std::optional<double> cost;
    if (config.fire_enabled) {
      if (auto p = plan(grid, fire.burning, agent, config.goal, config.planner)) {
        cost = p->total_cost;
        path = std::move(p->path);
      }
    } else {
      if (tick == 1) static_plan = plan(grid, fire.burning, agent, config.goal, config.planner);
      if (static_plan) {
        path.emplace(static_plan->path.begin() + static_cast<std::ptrdiff_t>(static_pos),
                     static_plan->path.end());
        cost = path_cost(grid, fire.burning, *path, costs);
      }
    }
    last_no_path = !path.has_value();

    if (path) {
      const std::size_t steps = std::min<std::size_t>(config.agent_speed, path->size() - 1);
      for (std::size_t i = 1; i <= steps; ++i) {
        const Coord next = (*path)[i];
        const auto c = step_cost(costs, grid, fire.burning, next, move_kind(agent, next));
        if (!c) break;  // unreachable: the plan avoids every blocked cell this tick
        trace.executed_cost += *c;
        trace.executed_path.push_back(next);
        agent = next;
        ++rec.moved;
      }
      static_pos += static_cast<std::size_t>(rec.moved);
    }

    rec.agent = agent;
    rec.planned_path = std::move(path);
    rec.plan_cost = cost;
    trace.records.push_back(std::move(rec));
    trace.ticks = tick;
    if (observer) observer(&trace.records.back(), fire);

    if (agent == config.goal) {
      trace.outcome = Outcome::Escaped;
      return trace;
    }
  }
  trace.outcome = last_no_path ? Outcome::Trapped : Outcome::TimedOut;
  return trace;
}

CompareReport compare_static_dynamic(const RoadGrid& grid, const ScenarioConfig& config,
                                     const TickObserver& dynamic_observer) {
  CompareReport report;
  ScenarioConfig off = config;
  off.fire_enabled = false;
  ScenarioConfig on = config;
  on.fire_enabled = true;

  validate(grid, off);
  const BurnMask empty(grid.width(), grid.height());
  report.static_plan = plan(grid, empty, config.start, config.goal, config.planner);
  report.static_trace = run_scenario(grid, off);
  report.dynamic_trace = run_scenario(grid, on, dynamic_observer);
  return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json coord_json(Coord c) { return ordered_json::array({c.x, c.y}); }

ordered_json path_json(const std::vector<Coord>& path) {
  ordered_json arr = ordered_json::array();
  for (Coord c : path) arr.push_back(coord_json(c));
  return arr;
}

ordered_json summary(const ScenarioTrace& trace) {
  ordered_json s;
  s["outcome"] = to_string(trace.outcome);
  s["executed_cost"] = trace.executed_cost;
  s["ticks"] = trace.ticks;
  s["seed"] = trace.seed;
  return s;
}

}  // namespace

std::string trace_to_jsonl(const ScenarioTrace& trace) {
  std::string out;
  for (const TickRecord& r : trace.records) {
    ordered_json j;
    j["tick"] = r.tick;
    j["agent"] = coord_json(r.agent);
    j["planned_path"] = r.planned_path ? path_json(*r.planned_path) : ordered_json(nullptr);
    j["plan_cost"] = r.plan_cost ? ordered_json(*r.plan_cost) : ordered_json(nullptr);
    j["burning_count"] = r.burning_count;
    j["moved"] = r.moved;
    out += j.dump();
    out += '\n';
  }
  out += summary(trace).dump();
  out += '\n';
  return out;
}

std::string summary_json(const ScenarioTrace& trace) {
  ordered_json s = summary(trace);
  s["executed_path"] = path_json(trace.executed_path);
  return s.dump(2) + "\n";
}

std::string compare_report_json(const CompareReport& report) {
  ordered_json j;
  const auto sc = report.static_cost();
  j["static_cost"] = sc ? ordered_json(*sc) : ordered_json(nullptr);
  j["dynamic_executed_cost"] = report.dynamic_executed_cost();
  j["dynamic_outcome"] = to_string(report.dynamic_trace.outcome);
  j["static_path"] = report.static_plan ? path_json(report.static_plan->path) : ordered_json(nullptr);
  j["dynamic_path"] = path_json(report.dynamic_trace.executed_path);
  j["seed"] = report.dynamic_trace.seed;
  return j.dump(2) + "\n";
}

}  // namespace wildroute
