#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "dtle/errors.hpp"
#include "dtle/image.hpp"

namespace dtle {

namespace detail {

inline bool pgm_is_space(int ch) {
  return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '\v' || ch == '\f';
}

/// Skips whitespace and '#' comment lines, returns the next token offset.
inline std::size_t pgm_skip(std::span<const std::uint8_t> data, std::size_t pos) {
  while (pos < data.size()) {
    if (pgm_is_space(data[pos])) {
      ++pos;
    } else if (data[pos] == '#') {
      while (pos < data.size() && data[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
  return pos;
}

inline long pgm_read_int(std::span<const std::uint8_t> data, std::size_t& pos, const char* what) {
  pos = pgm_skip(data, pos);
  if (pos >= data.size() || data[pos] < '0' || data[pos] > '9')
    throw ParseError(std::string("expected ") + what, pos);
  long value = 0;
  while (pos < data.size() && data[pos] >= '0' && data[pos] <= '9') {
    value = value * 10 + (data[pos] - '0');
    if (value > 1'000'000'000L) throw ParseError(std::string(what) + " out of range", pos);
    ++pos;
  }
  return value;
}

}  // namespace detail

/// Parses a binary PGM (magic "P5", maxval 255). Header comments are
/// skipped; pixel values pass through untouched.
inline GrayImage read_pgm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || data[1] != '5')
    throw ParseError("not a binary PGM (missing P5 magic)", 0);
  std::size_t pos = 2;
  long w = detail::pgm_read_int(data, pos, "width");
  long h = detail::pgm_read_int(data, pos, "height");
  long maxval = detail::pgm_read_int(data, pos, "maxval");
  if (w <= 0 || h <= 0) throw ParseError("non-positive dimensions", pos);
  if (maxval != 255) throw ParseError("unsupported maxval (only 255)", pos);
  if (pos >= data.size() || !detail::pgm_is_space(data[pos]))
    throw ParseError("missing whitespace after maxval", pos);
  ++pos;  // exactly one whitespace byte separates header and raster
  std::size_t need = static_cast<std::size_t>(w) * static_cast<std::size_t>(h);
  if (data.size() - pos < need) throw ParseError("truncated pixel data", data.size());
  GrayImage img;
  img.height = static_cast<int>(h);
  img.width = static_cast<int>(w);
  img.pixels.assign(data.begin() + static_cast<std::ptrdiff_t>(pos),
                    data.begin() + static_cast<std::ptrdiff_t>(pos + need));
  return img;
}

inline GrayImage read_pgm(const std::vector<std::uint8_t>& data) {
  return read_pgm(std::span<const std::uint8_t>(data));
}

/// Canonical header "P5\n<w> <h>\n255\n" followed by the raw raster; a
/// read_pgm round-trip reproduces the image bit-exactly.
inline std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
  if (!img.valid()) throw ParameterError("invalid image");
  std::string header = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

inline GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_pgm(data);
}

inline void save_pgm(const std::string& path, const GrayImage& img) {
  auto data = write_pgm(img);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing", 0);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw ParseError("short write to " + path, 0);
}

}  // namespace dtle
