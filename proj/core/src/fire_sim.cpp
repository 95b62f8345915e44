#include "wildroute/fire_sim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wildroute {

void FireParams::validate() const {
  auto bad = [](const char* what) { throw std::invalid_argument(std::string("fire: ") + what); };
  if (!(spread_probability >= 0.0 && spread_probability <= 1.0)) bad("spread_probability outside [0,1]");
  if (!(wind_speed >= 0.0)) bad("wind_speed must be >= 0");
  if (!(wind_jitter_deg >= 0.0)) bad("wind_jitter must be >= 0");
  if (!(initial_radius >= 0.0)) bad("radius must be >= 0");
  if (!(radius_growth >= 0.0)) bad("radius_growth must be >= 0");
  if (!std::isfinite(wind_direction_deg)) bad("wind_direction must be finite");
  if (num_steps < 0) bad("num_steps must be >= 0");
}

namespace {

void ignite_disc(BurnMask& mask, double cx, double cy, double r) {
  const double r2 = r * r;
  const int y0 = std::max(0, static_cast<int>(std::floor(cy - r)));
  const int y1 = std::min(mask.height() - 1, static_cast<int>(std::ceil(cy + r)));
  const int x0 = std::max(0, static_cast<int>(std::floor(cx - r)));
  const int x1 = std::min(mask.width() - 1, static_cast<int>(std::ceil(cx + r)));
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) {
      const double dx = x - cx, dy = y - cy;
      if (dx * dx + dy * dy <= r2) mask.ignite({x, y});
    }
  }
}

double flammability_at(const FireParams& params, Coord c) {
  if (!params.flammability) return 1.0;
  return std::clamp(params.flammability->at(c.x, c.y), 0.0, 1.0);
}

}  // namespace

FireState init_fire(const FireParams& params, const RoadGrid& grid, std::uint64_t seed) {
  params.validate();
  if (!(params.source_x >= 0.0 && params.source_x <= grid.width() - 1.0 &&
        params.source_y >= 0.0 && params.source_y <= grid.height() - 1.0))
    throw std::invalid_argument("fire: source outside grid");
  if (params.flammability &&
      (params.flammability->width != grid.width() || params.flammability->height != grid.height()))
    throw std::invalid_argument("fire: flammability raster dimensions differ from the grid");

  FireState s;
  s.burning = BurnMask(grid.width(), grid.height());
  s.source_x = params.source_x;
  s.source_y = params.source_y;
  s.radius = std::min(params.initial_radius, static_cast<double>(std::max(grid.width(), grid.height())));
  s.disc_radius = s.radius;
  s.wind_direction_deg = params.wind_direction_deg;
  s.rng = RngStream(seed);
  ignite_disc(s.burning, s.source_x, s.source_y, s.radius);
  return s;
}

void perturb_wind(FireState& state, double jitter_deg) {
  const double u = state.rng.uniform();
  state.rng.count_draw();
  state.wind_direction_deg += jitter_deg * (2.0 * u - 1.0);
}

void step_fire(FireState& state, const RoadGrid& grid, const FireParams& params) {
  if (state.tick >= params.num_steps) throw std::logic_error("step_fire: num_steps exhausted");
  const BurnMask before = state.burning;

  perturb_wind(state, params.wind_jitter_deg);

  const double theta = state.wind_direction_deg * std::numbers::pi / 180.0;
  state.source_x = std::clamp(state.source_x + params.wind_speed * std::cos(theta), 0.0,
                              grid.width() - 1.0);
  state.source_y = std::clamp(state.source_y + params.wind_speed * std::sin(theta), 0.0,
                              grid.height() - 1.0);

  ignite_disc(state.burning, state.source_x, state.source_y, state.radius);
  state.disc_radius = state.radius;

  // Candidates touch the pre-tick set; ignitions land in the new set only.
  const int w = grid.width(), h = grid.height();
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const Coord c{x, y};
      if (state.burning.burning(c)) continue;
      bool adjacent = false;
      for (int dy = -1; dy <= 1 && !adjacent; ++dy)
        for (int dx = -1; dx <= 1 && !adjacent; ++dx)
          if ((dx || dy) && before.burning({x + dx, y + dy})) adjacent = true;
      if (!adjacent) continue;
      const double u = state.rng.uniform();
      state.rng.count_draw();
      if (u < params.spread_probability * flammability_at(params, c)) state.burning.ignite(c);
    }
  }

  state.radius = std::min(state.radius + params.radius_growth, static_cast<double>(std::max(w, h)));
  ++state.tick;
}

std::uint64_t burning_hash(const BurnMask& burning) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&h](std::int32_t v) {
    const auto u = static_cast<std::uint32_t>(v);
    for (int i = 0; i < 4; ++i) {
      h ^= (u >> (8 * i)) & 0xFFu;
      h *= 0x100000001B3ULL;
    }
  };
  for (Coord c : burning.cells()) {
    feed(c.x);
    feed(c.y);
  }
  return h;
}

std::string format_real(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, end);
  if (s.find_first_of(".eni") == std::string::npos) s += ".0";
  return s;
}

std::string golden_line(const FireState& state) {
  char hash[17];
  const auto [end, ec] = std::to_chars(hash, hash + 16, burning_hash(state.burning), 16);
  std::string hex(hash, end);
  hex.insert(0, 16 - hex.size(), '0');
  return "tick=" + std::to_string(state.tick) + " src=" + format_real(state.source_x) + "," +
         format_real(state.source_y) + " r=" + format_real(state.radius) +
         " theta=" + format_real(state.wind_direction_deg) +
         " burning=" + std::to_string(state.burning.count()) + " hash=" + hex;
}

}  // namespace wildroute
