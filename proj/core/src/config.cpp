#include "wildroute/config.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>

#include <json.hpp>

namespace wildroute {

namespace {

using nlohmann::json;

// Walks one JSON object, tracking which keys were consumed so leftovers can be rejected.
class Section {
 public:
  Section(const json& obj, std::string prefix) : obj_(obj), prefix_(std::move(prefix)) {
    if (!obj_.is_object()) throw ConfigError("wrong type: " + (prefix_.empty() ? "<root>" : prefix_) + " (expected object)");
  }

  std::string path(std::string_view key) const {
    return prefix_.empty() ? std::string(key) : prefix_ + "." + std::string(key);
  }

  const json* find(std::string_view key) {
    seen_.emplace_back(key);
    auto it = obj_.find(std::string(key));
    return it == obj_.end() ? nullptr : &*it;
  }

  const json& require(std::string_view key) {
    const json* v = find(key);
    if (!v) throw ConfigError("missing key: " + path(key));
    return *v;
  }

  double number(const json& v, std::string_view key) const {
    if (!v.is_number()) throw ConfigError("wrong type: " + path(key) + " (expected number)");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError("out of range: " + path(key));
    return d;
  }

  double req_number(std::string_view key) { return number(require(key), key); }
  double opt_number(std::string_view key, double def) {
    const json* v = find(key);
    return v ? number(*v, key) : def;
  }

  long long integer(const json& v, std::string_view key) const {
    if (!v.is_number_integer()) throw ConfigError("wrong type: " + path(key) + " (expected integer)");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<int>::max()))
      throw ConfigError("out of range: " + path(key));
    return v.get<long long>();
  }
  int req_int(std::string_view key, long long lo, long long hi) { return ranged(integer(require(key), key), key, lo, hi); }
  int opt_int(std::string_view key, int def, long long lo, long long hi) {
    const json* v = find(key);
    return v ? ranged(integer(*v, key), key, lo, hi) : def;
  }

  std::string req_string(std::string_view key) { return string(require(key), key); }
  std::optional<std::string> opt_string(std::string_view key) {
    const json* v = find(key);
    return v ? std::optional(string(*v, key)) : std::nullopt;
  }

  bool opt_bool(std::string_view key, bool def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_boolean()) throw ConfigError("wrong type: " + path(key) + " (expected boolean)");
    return v->get<bool>();
  }

  template <typename E>
  E opt_enum(std::string_view key, E def, std::initializer_list<std::pair<const char*, E>> choices) {
    const json* v = find(key);
    if (!v) return def;
    const std::string s = string(*v, key);
    for (const auto& [name, value] : choices)
      if (s == name) return value;
    throw ConfigError("out of range: " + path(key) + " ('" + s + "')");
  }

  Coord req_coord(std::string_view key) {
    const json& v = require(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
      throw ConfigError("wrong type: " + path(key) + " (expected [x, y] integers)");
    return {static_cast<int>(v[0].get<long long>()), static_cast<int>(v[1].get<long long>())};
  }

  void check_range(std::string_view key, double v, double lo, double hi) const {
    if (!(v >= lo && v <= hi)) throw ConfigError("out of range: " + path(key));
  }

  /// Rejects keys that were never looked up.
  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      bool known = false;
      for (const auto& k : seen_) known = known || k == it.key();
      if (!known) throw ConfigError("unknown key: " + path(it.key()));
    }
  }

 private:
  int ranged(long long v, std::string_view key, long long lo, long long hi) const {
    if (v < lo || v > hi) throw ConfigError("out of range: " + path(key));
    return static_cast<int>(v);
  }
  std::string string(const json& v, std::string_view key) const {
    if (!v.is_string()) throw ConfigError("wrong type: " + path(key) + " (expected string)");
    return v.get<std::string>();
  }

  const json& obj_;
  std::string prefix_;
  std::vector<std::string> seen_;
};

constexpr double kBig = std::numeric_limits<double>::max();
constexpr long long kIntMax = std::numeric_limits<int>::max();

}  // namespace

RunConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }

  RunConfig cfg;
  ScenarioConfig& sc = cfg.scenario;
  Section root(doc, "");
  sc.map = root.req_string("map");
  sc.start = root.req_coord("start");
  sc.goal = root.req_coord("goal");

  {
    Section fire(root.require("fire"), "fire");
    FireParams& f = sc.fire;
    f.source_x = fire.req_number("x");
    f.source_y = fire.req_number("y");
    f.initial_radius = fire.req_number("radius");
    fire.check_range("radius", f.initial_radius, 0.0, kBig);
    f.spread_probability = fire.req_number("spread_probability");
    fire.check_range("spread_probability", f.spread_probability, 0.0, 1.0);
    f.wind_speed = fire.req_number("wind_speed");
    fire.check_range("wind_speed", f.wind_speed, 0.0, kBig);
    f.wind_direction_deg = fire.req_number("wind_direction_deg");
    f.wind_jitter_deg = fire.opt_number("wind_jitter_deg", 15.0);
    fire.check_range("wind_jitter_deg", f.wind_jitter_deg, 0.0, kBig);
    f.radius_growth = fire.opt_number("radius_growth", 1.0);
    fire.check_range("radius_growth", f.radius_growth, 0.0, kBig);
    cfg.flammability = fire.opt_string("flammability");
    fire.finish();
  }

  {
    Section sim(root.require("sim"), "sim");
    sc.fire.num_steps = sim.req_int("num_steps", 0, kIntMax);
    const json& seed = sim.require("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
      throw ConfigError("wrong type: sim.seed (expected non-negative integer)");
    sc.seed = seed.get<std::uint64_t>();
    sc.agent_speed = sim.opt_int("agent_speed", 5, 1, kIntMax);
    sc.max_ticks = sim.opt_int("max_ticks", 1000, 1, kIntMax);
    sc.fire_enabled = sim.opt_bool("fire_enabled", true);
    sim.finish();
  }

  if (const json* p = root.find("planner")) {
    Section planner(*p, "planner");
    sc.planner.heuristic_mode = planner.opt_enum(
        "heuristic_mode", HeuristicMode::Paper,
        {{"paper", HeuristicMode::Paper}, {"admissible", HeuristicMode::Admissible}});
    sc.planner.tie_break = planner.opt_enum(
        "tie_break", TieBreak::PreferLargerG,
        {{"prefer-larger-g", TieBreak::PreferLargerG}, {"fifo", TieBreak::Fifo}});
    sc.planner.cost_model.safety_margin = planner.opt_int("safety_margin", 0, 0, kIntMax);
    planner.finish();
  }

  if (const json* n = root.find("ndvi")) {
    Section ndvi(*n, "ndvi");
    NdviOptions o;
    o.nir = ndvi.req_string("nir");
    o.red = ndvi.req_string("red");
    o.tau = ndvi.opt_number("tau", kDefaultNdviThreshold);
    ndvi.check_range("tau", o.tau, -1.0, 1.0);
    ndvi.finish();
    cfg.ndvi = std::move(o);
  }

  if (const json* r = root.find("render")) {
    Section render(*r, "render");
    const bool paper = render.opt_enum("style", false, {{"default", false}, {"paper", true}});
    cfg.style = paper ? RenderStyle::paper() : RenderStyle{};
    cfg.style.scale = render.opt_int("scale", 4, 1, 64);
    cfg.style.marker_radius = render.opt_int("marker_radius", 2, 0, kIntMax);
    render.finish();
  }

  root.finish();
  return cfg;
}

RoadGrid load_world(RunConfig& cfg, const std::filesystem::path& base_dir) {
  auto resolve = [&](const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };
  RoadGrid grid = grid_from_image(read_ppm(resolve(cfg.scenario.map)));
  if (cfg.ndvi) {
    const BandRaster index = ndvi(read_band(resolve(cfg.ndvi->nir)), read_band(resolve(cfg.ndvi->red)));
    grid = weight_roads_by_ndvi(grid, index, cfg.ndvi->tau);
  }
  if (cfg.flammability) cfg.scenario.fire.flammability = read_band(resolve(*cfg.flammability));
  return grid;
}

}  // namespace wildroute
