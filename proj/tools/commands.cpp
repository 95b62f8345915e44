#include "commands.hpp"

#include <array>
#include <cstdio>
#include <iostream>
#include <queue>

#include <json.hpp>

#include "wildroute/config.hpp"
#include "wildroute/render.hpp"

namespace wildroute::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct Loaded {
  RunConfig cfg;
  RoadGrid grid;
};

Loaded load(const CommonOptions& opts) {
  const auto bytes = read_file(opts.config);
  RunConfig cfg = parse_config(std::string(bytes.begin(), bytes.end()));
  if (opts.seed) cfg.scenario.seed = *opts.seed;
  if (opts.style) {
    const int scale = cfg.style.scale, marker = cfg.style.marker_radius;
    if (*opts.style == "paper") cfg.style = RenderStyle::paper();
    else if (*opts.style == "default") cfg.style = RenderStyle{};
    else throw ConfigError("out of range: --style ('" + *opts.style + "')");
    cfg.style.scale = scale;
    cfg.style.marker_radius = marker;
  }
  RoadGrid grid = load_world(cfg, opts.config.parent_path());
  return {std::move(cfg), std::move(grid)};
}

void prepare_out_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::ios_base::failure("cannot create " + dir.string() + ": " + ec.message());
}

ordered_json path_json(const std::vector<Coord>& path) {
  ordered_json arr = ordered_json::array();
  for (Coord c : path) arr.push_back({c.x, c.y});
  return arr;
}

std::string frame_name(int index) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "frame_%04d.ppm", index);
  return buf.data();
}

}  // namespace

int cmd_plan(const CommonOptions& opts) {
  auto [cfg, grid] = load(opts);
  const ScenarioConfig& sc = cfg.scenario;
  prepare_out_dir(opts.out_dir);

  const BurnMask none(grid.width(), grid.height());
  const auto result = plan(grid, none, sc.start, sc.goal, sc.planner);

  ordered_json j;
  j["start"] = {sc.start.x, sc.start.y};
  j["goal"] = {sc.goal.x, sc.goal.y};
  j["no_path"] = !result.has_value();
  j["total_cost"] = result ? ordered_json(result->total_cost) : ordered_json(nullptr);
  j["expanded"] = result ? result->expanded : 0;
  j["path"] = result ? path_json(result->path) : ordered_json(nullptr);
  write_file(opts.out_dir / "plan.json", j.dump(2) + "\n");

  std::vector<std::vector<Coord>> paths;
  if (result) paths.push_back(result->path);
  write_ppm(opts.out_dir / "plan.ppm", render_frame(grid, nullptr, paths, sc.start, sc.goal, cfg.style));
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_simulate(const CommonOptions& opts, bool frames) {
  auto [cfg, grid] = load(opts);
  const ScenarioConfig& sc = cfg.scenario;
  prepare_out_dir(opts.out_dir);

  std::vector<Coord> walked{sc.start};
  int frame = 0;
  TickObserver observer;
  if (frames) {
    observer = [&](const TickRecord* rec, const FireState& fire) {
      std::vector<std::vector<Coord>> paths;
      if (rec) {
        if (rec->planned_path) paths.push_back(*rec->planned_path);
        const auto& pp = rec->planned_path;
        if (pp)
          for (int i = 1; i <= rec->moved; ++i) walked.push_back((*pp)[static_cast<std::size_t>(i)]);
      }
      paths.push_back(walked);
      write_ppm(opts.out_dir / frame_name(frame++),
                render_frame(grid, &fire, paths, sc.start, sc.goal, cfg.style));
    };
  }

  const ScenarioTrace trace = run_scenario(grid, sc, observer);
  write_file(opts.out_dir / "trace.jsonl", trace_to_jsonl(trace));
  write_file(opts.out_dir / "summary.json", summary_json(trace));
  std::cout << "outcome=" << to_string(trace.outcome) << " executed_cost=" << trace.executed_cost
            << " ticks=" << trace.ticks << "\n";
  return kOk;
}

int cmd_compare(const CommonOptions& opts) {
  auto [cfg, grid] = load(opts);
  const ScenarioConfig& sc = cfg.scenario;
  prepare_out_dir(opts.out_dir);

  std::optional<FireState> last_fire;
  const CompareReport report = compare_static_dynamic(
      grid, sc, [&](const TickRecord*, const FireState& fire) { last_fire = fire; });

  write_file(opts.out_dir / "compare.json", compare_report_json(report));

  std::vector<std::vector<Coord>> static_paths;
  if (report.static_plan) static_paths.push_back(report.static_plan->path);
  write_ppm(opts.out_dir / "static.ppm",
            render_frame(grid, nullptr, static_paths, sc.start, sc.goal, cfg.style));
  write_ppm(opts.out_dir / "dynamic.ppm",
            render_frame(grid, last_fire ? &*last_fire : nullptr,
                         {report.dynamic_trace.executed_path}, sc.start, sc.goal, cfg.style));

  const auto static_cost = report.static_cost();
  std::cout << "static_cost=" << (static_cost ? format_real(*static_cost) : "none")
            << " dynamic_executed_cost=" << report.dynamic_executed_cost()
            << " dynamic_outcome=" << to_string(report.dynamic_trace.outcome) << "\n";
  return kOk;
}

int cmd_validate_map(const fs::path& map) {
  const RoadGrid grid = grid_from_image(read_ppm(map));

  std::array<std::size_t, 3> hist{};
  for (CellClass c : grid.cells()) ++hist[static_cast<std::size_t>(c)];

  // 8-connected components of road cells.
  std::vector<int> label(grid.size(), -1);
  std::size_t components = 0, largest = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (label[i] >= 0 || grid.cells()[i] == CellClass::Impassable) continue;
    std::size_t size = 0;
    std::queue<std::size_t> q;
    q.push(i);
    label[i] = static_cast<int>(components);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      ++size;
      for (const Neighbor& nb : neighbors8(grid, grid.coord(u))) {
        const std::size_t v = grid.index(nb.at);
        if (label[v] >= 0 || grid.cells()[v] == CellClass::Impassable) continue;
        label[v] = static_cast<int>(components);
        q.push(v);
      }
    }
    ++components;
    largest = std::max(largest, size);
  }

  ordered_json j;
  j["width"] = grid.width();
  j["height"] = grid.height();
  j["classes"] = {{"impassable", hist[0]}, {"good", hist[1]}, {"poor", hist[2]}};
  j["road_components"] = components;
  j["largest_component"] = largest;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int report_current_exception() {
  std::string kind;
  std::string message;
  int code = kScenarioError;
  try {
    throw;
  } catch (const ConfigError& e) {
    kind = "config", message = e.what(), code = kConfigError;
  } catch (const RasterError& e) {
    kind = "io", message = e.what(), code = kIoError;
  } catch (const std::ios_base::failure& e) {
    kind = "io", message = e.what(), code = kIoError;
  } catch (const ScenarioError& e) {
    kind = "scenario", message = e.what(), code = kScenarioError;
  } catch (const InvalidQuery& e) {
    kind = "scenario", message = e.what(), code = kScenarioError;
  } catch (const std::exception& e) {
    kind = "scenario", message = e.what(), code = kScenarioError;
  }
  ordered_json j;
  j["error"] = kind;
  j["exit_code"] = code;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
  return code;
}

}  // namespace wildroute::cli
