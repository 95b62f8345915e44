#include "wildroute/raster_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

namespace wildroute {

RasterRgb::RasterRgb(int w, int h, Rgb fill) : width(w), height(h) {
  pixels.resize(3 * static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  for (std::size_t i = 0; i < pixels.size(); i += 3) {
    pixels[i] = fill.r;
    pixels[i + 1] = fill.g;
    pixels[i + 2] = fill.b;
  }
}

BandRaster::BandRaster(int w, int h, double fill)
    : width(w), height(h), samples(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t offset() const { return pos_; }

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  long read_int(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > 1'000'000'000L) fail(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what, start);
    return value;
  }

  [[noreturn]] static void fail(const std::string& msg, std::size_t at) {
    throw RasterError("ppm: " + msg + " at offset " + std::to_string(at));
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

RasterRgb decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6')
    HeaderReader::fail("bad magic, expected P6", 0);
  HeaderReader rd(bytes);
  rd.pos_ = 2;
  const std::size_t w_at = rd.offset();
  const long w = rd.read_int("width");
  const long h = rd.read_int("height");
  if (w <= 0 || h <= 0) HeaderReader::fail("nonpositive dimensions", w_at);
  const std::size_t max_at = rd.offset();
  const long maxval = rd.read_int("maxval");
  if (maxval != 255) HeaderReader::fail("maxval must be 255", max_at);
  if (rd.pos_ >= bytes.size() || !std::isspace(bytes[rd.pos_]))
    HeaderReader::fail("truncated pixel data", rd.pos_);
  ++rd.pos_;  // single whitespace byte before the raster

  RasterRgb img;
  img.width = static_cast<int>(w);
  img.height = static_cast<int>(h);
  const std::size_t need = 3 * static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  if (bytes.size() - rd.pos_ < need)
    HeaderReader::fail("truncated pixel data", bytes.size());
  img.pixels.assign(bytes.begin() + static_cast<std::ptrdiff_t>(rd.pos_),
                    bytes.begin() + static_cast<std::ptrdiff_t>(rd.pos_ + need));
  return img;
}

std::vector<std::uint8_t> encode_ppm(const RasterRgb& img) {
  const std::string header =
      "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

BandRaster parse_band(const std::string& text) {
  std::istringstream in(text);
  long w = 0, h = 0;
  if (!(in >> w >> h) || w <= 0 || h <= 0) throw RasterError("band: bad header");
  BandRaster band(static_cast<int>(w), static_cast<int>(h));
  std::string tok;
  for (std::size_t i = 0; i < band.samples.size(); ++i) {
    if (!(in >> tok)) throw RasterError("band: expected " + std::to_string(band.samples.size()) +
                                        " samples, got " + std::to_string(i));
    double v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || end != tok.data() + tok.size() || !std::isfinite(v))
      throw RasterError("band: bad sample '" + tok + "' at index " + std::to_string(i));
    band.samples[i] = v;
  }
  if (in >> tok) throw RasterError("band: trailing data");
  return band;
}

std::string format_band(const BandRaster& band) {
  std::string out = std::to_string(band.width) + " " + std::to_string(band.height) + "\n";
  char buf[32];
  for (int y = 0; y < band.height; ++y) {
    for (int x = 0; x < band.width; ++x) {
      const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, band.at(x, y));
      if (x) out += ' ';
      out.append(buf, end);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

RasterRgb read_ppm(const std::filesystem::path& path) { return decode_ppm(read_file(path)); }

void write_ppm(const std::filesystem::path& path, const RasterRgb& img) {
  write_file(path, encode_ppm(img));
}

BandRaster read_band(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return parse_band(std::string(bytes.begin(), bytes.end()));
}

CellClass classify_pixel(Rgb px) {
  static constexpr std::pair<Rgb, CellClass> kPalette[] = {
      {kImpassableColor, CellClass::Impassable},
      {kGoodColor, CellClass::Good},
      {kPoorColor, CellClass::Poor},
  };
  auto dist2 = [](Rgb a, Rgb b) {
    const int dr = a.r - b.r, dg = a.g - b.g, db = a.b - b.b;
    return dr * dr + dg * dg + db * db;
  };
  CellClass best = CellClass::Impassable;
  int best_d = -1;
  for (const auto& [color, cls] : kPalette) {
    const int d = dist2(px, color);
    if (best_d < 0 || d < best_d) {  // strict: earlier palette entry keeps ties
      best_d = d;
      best = cls;
    }
  }
  return best;
}

RoadGrid grid_from_image(const RasterRgb& img) {
  std::vector<CellClass> cells;
  cells.reserve(static_cast<std::size_t>(img.width) * img.height);
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x) cells.push_back(classify_pixel(img.at(x, y)));
  return RoadGrid(img.width, img.height, std::move(cells));
}

RasterRgb image_from_grid(const RoadGrid& grid) {
  RasterRgb img(grid.width(), grid.height());
  for (int y = 0; y < grid.height(); ++y) {
    for (int x = 0; x < grid.width(); ++x) {
      switch (grid.at({x, y})) {
        case CellClass::Impassable: img.set(x, y, kImpassableColor); break;
        case CellClass::Good: img.set(x, y, kGoodColor); break;
        case CellClass::Poor: img.set(x, y, kPoorColor); break;
      }
    }
  }
  return img;
}

BandRaster ndvi(const BandRaster& nir, const BandRaster& red) {
  if (nir.width != red.width || nir.height != red.height)
    throw RasterError("ndvi: band dimensions differ");
  BandRaster out(nir.width, nir.height);
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    const double sum = nir.samples[i] + red.samples[i];
    out.samples[i] = sum == 0.0 ? 0.0 : (nir.samples[i] - red.samples[i]) / sum;
  }
  return out;
}

RoadGrid weight_roads_by_ndvi(const RoadGrid& grid, const BandRaster& ndvi_band, double tau) {
  if (ndvi_band.width != grid.width() || ndvi_band.height != grid.height())
    throw RasterError("ndvi raster dimensions differ from the road grid");
  if (!(tau >= -1.0 && tau <= 1.0)) throw std::invalid_argument("ndvi threshold outside [-1, 1]");
  std::vector<CellClass> cells = grid.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] == CellClass::Impassable) continue;
    cells[i] = ndvi_band.samples[i] >= tau ? CellClass::Poor : CellClass::Good;
  }
  return RoadGrid(grid.width(), grid.height(), std::move(cells));
}

}  // namespace wildroute
