#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wildroute/grid.hpp"
#include "wildroute/raster_io.hpp"

namespace wildroute {

/// splitmix64 stream. uniform() maps the top 53 bits of the next word onto [0, 1).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  std::uint64_t state() const { return state_; }
  std::uint64_t draws() const { return draws_; }
  void count_draw() { ++draws_; }

  friend bool operator==(const RngStream&, const RngStream&) = default;

 private:
  std::uint64_t state_;
  std::uint64_t draws_ = 0;
};

struct FireParams {
  double spread_probability = 0.0;
  double wind_speed = 0.0;           // cells per tick
  double wind_direction_deg = 0.0;   // 0 = +x, 90 = +y
  double wind_jitter_deg = 15.0;
  double source_x = 0.0;
  double source_y = 0.0;
  double initial_radius = 0.0;
  double radius_growth = 1.0;        // cells per tick
  int num_steps = 0;
  std::optional<BandRaster> flammability;  // [0,1] multiplier on spread_probability

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct FireState {
  BurnMask burning;
  double source_x = 0.0;
  double source_y = 0.0;
  double radius = 0.0;
  /// Radius of the most recent source disc ignition.
  double disc_radius = 0.0;
  double wind_direction_deg = 0.0;
  int tick = 0;
  RngStream rng;

  bool is_burning(Coord c) const { return burning.burning(c); }

  friend bool operator==(const FireState&, const FireState&) = default;
};

FireState init_fire(const FireParams& params, const RoadGrid& grid, std::uint64_t seed);

/// Rotates the wind by a uniform draw in [-jitter, +jitter] degrees. Consumes one draw.
void perturb_wind(FireState& state, double jitter_deg);

/// One tick: wind jitter, source advection, disc ignition, synchronous frontier
/// spread, radius growth. Throws std::logic_error once num_steps ticks have run.
void step_fire(FireState& state, const RoadGrid& grid, const FireParams& params);

/// FNV-1a over burning cells in row-major order, each as little-endian int32 x then y.
std::uint64_t burning_hash(const BurnMask& burning);

/// "tick=<t> src=<x>,<y> r=<r> theta=<deg> burning=<count> hash=<16 hex digits>"
std::string golden_line(const FireState& state);

/// Shortest round-trip decimal, always with a fractional part or exponent ("2.0", "0.1").
std::string format_real(double v);

}  // namespace wildroute
