#pragma once

#include <cstdint>
#include <vector>

#include "dtle/errors.hpp"

namespace dtle {

/// 8-bit single-channel raster, row-major.
struct GrayImage {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int h, int w, std::uint8_t fill = 0)
      : height(h), width(w), pixels(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), fill) {}

  std::uint8_t at(int r, int c) const {
    return pixels[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) + static_cast<std::size_t>(c)];
  }
  std::uint8_t& at(int r, int c) {
    return pixels[static_cast<std::size_t>(r) * static_cast<std::size_t>(width) + static_cast<std::size_t>(c)];
  }

  std::size_t pixel_count() const { return static_cast<std::size_t>(height) * static_cast<std::size_t>(width); }

  bool valid() const {
    return height > 0 && width > 0 && pixels.size() == pixel_count();
  }

  bool operator==(const GrayImage&) const = default;
};

/// MED-transformed raster: row 0 and column 0 keep original pixels, the rest
/// holds the shifted difference values. Same representation, different
/// reading; kept as an alias so signatures say which domain they expect.
using DiffImage = GrayImage;

}  // namespace dtle
