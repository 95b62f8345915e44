#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wildroute/grid.hpp"

namespace wildroute {

class RasterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(Rgb, Rgb) = default;
};

/// 8-bit RGB image, row-major, three bytes per pixel.
struct RasterRgb {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  RasterRgb() = default;
  RasterRgb(int w, int h, Rgb fill = {});

  Rgb at(int x, int y) const {
    const auto i = 3 * (static_cast<std::size_t>(y) * width + x);
    return {pixels[i], pixels[i + 1], pixels[i + 2]};
  }
  void set(int x, int y, Rgb c) {
    const auto i = 3 * (static_cast<std::size_t>(y) * width + x);
    pixels[i] = c.r;
    pixels[i + 1] = c.g;
    pixels[i + 2] = c.b;
  }

  friend bool operator==(const RasterRgb&, const RasterRgb&) = default;
};

/// Single-band real raster (reflectance, NDVI, flammability), row-major.
struct BandRaster {
  int width = 0;
  int height = 0;
  std::vector<double> samples;

  BandRaster() = default;
  BandRaster(int w, int h, double fill = 0.0);

  double at(int x, int y) const { return samples[static_cast<std::size_t>(y) * width + x]; }
  double& at(int x, int y) { return samples[static_cast<std::size_t>(y) * width + x]; }

  friend bool operator==(const BandRaster&, const BandRaster&) = default;
};

// Binary PPM (P6, maxval 255). Header comments are accepted on decode.
RasterRgb decode_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const RasterRgb& img);

// Band text format: "<width> <height>" then width*height decimals, row-major.
BandRaster parse_band(const std::string& text);
std::string format_band(const BandRaster& band);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);
void write_file(const std::filesystem::path& path, const std::string& text);

RasterRgb read_ppm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const RasterRgb& img);
BandRaster read_band(const std::filesystem::path& path);

inline constexpr Rgb kImpassableColor{0, 0, 0};
inline constexpr Rgb kGoodColor{0, 255, 0};
inline constexpr Rgb kPoorColor{255, 255, 255};

/// Nearest palette colour wins (squared RGB distance); ties go black, green, white.
CellClass classify_pixel(Rgb px);
RoadGrid grid_from_image(const RasterRgb& img);
/// Inverse of grid_from_image on clean palette images.
RasterRgb image_from_grid(const RoadGrid& grid);

/// (NIR - Red) / (NIR + Red); a zero denominator yields 0.
BandRaster ndvi(const BandRaster& nir, const BandRaster& red);

inline constexpr double kDefaultNdviThreshold = 0.3;

/// Road cells with NDVI >= tau become Poor, the rest Good. Impassable cells are kept.
RoadGrid weight_roads_by_ndvi(const RoadGrid& grid, const BandRaster& ndvi_band,
                              double tau = kDefaultNdviThreshold);

}  // namespace wildroute
