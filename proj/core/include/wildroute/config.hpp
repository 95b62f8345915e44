#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wildroute/render.hpp"
#include "wildroute/scenario.hpp"

namespace wildroute {

/// Schema violations. The message names the offending key path, e.g.
/// "missing key: map" or "out of range: fire.spread_probability".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NdviOptions {
  std::string nir;
  std::string red;
  double tau = kDefaultNdviThreshold;
};

struct RunConfig {
  ScenarioConfig scenario;
  std::optional<std::string> flammability;  // band file, resolved by load_world
  std::optional<NdviOptions> ndvi;
  RenderStyle style;
};

/// Parses a UTF-8 JSON scenario document. Unknown keys are rejected.
///
///   map                     road raster (PPM), required
///   start, goal             [x, y], required
///   fire.x, fire.y, fire.radius, fire.spread_probability,
///   fire.wind_speed, fire.wind_direction_deg                      required
///   fire.wind_jitter_deg (15), fire.radius_growth (1), fire.flammability
///   sim.num_steps, sim.seed                                        required
///   sim.agent_speed (5), sim.max_ticks (1000), sim.fire_enabled (true)
///   planner.heuristic_mode ("paper" | "admissible"), planner.tie_break
///   ("prefer-larger-g" | "fifo"), planner.safety_margin (0)
///   ndvi.nir, ndvi.red, ndvi.tau (0.3)
///   render.scale (4), render.style ("default" | "paper"), render.marker_radius (2)
RunConfig parse_config(std::string_view json_text);

/// Reads the map (and NDVI bands / flammability, when configured) relative to
/// `base_dir`. Fills cfg.scenario.fire.flammability. I/O and decode failures
/// propagate as std::ios_base::failure / RasterError.
RoadGrid load_world(RunConfig& cfg, const std::filesystem::path& base_dir);

}  // namespace wildroute
