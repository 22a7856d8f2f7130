#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dtle/image.hpp"

namespace dtle::synth {

// Deterministic photographic-style test scenes. Only the specified mt19937
// output stream and plain arithmetic are used, so a given seed produces the
// same raster everywhere. The standard suite mimics the usual benchmark set
// by texture class: smooth portraits, heavy texture, and "complex" scenes
// whose large saturated regions stress the location map.

namespace detail {

inline int uniform(std::mt19937& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

/// Smooth random field: a coarse random lattice, bilinearly interpolated.
inline std::vector<double> lattice_field(std::mt19937& rng, int h, int w, int lattice,
                                         double lo, double hi) {
  const int gh = lattice + 1, gw = lattice + 1;
  std::vector<double> grid(static_cast<std::size_t>(gh) * gw);
  for (auto& g : grid) g = lo + (hi - lo) * (rng() % 10000) / 9999.0;
  std::vector<double> field(static_cast<std::size_t>(h) * w);
  for (int r = 0; r < h; ++r) {
    const double gy = static_cast<double>(r) * lattice / h;
    const int y0 = static_cast<int>(gy);
    const double fy = gy - y0;
    for (int c = 0; c < w; ++c) {
      const double gx = static_cast<double>(c) * lattice / w;
      const int x0 = static_cast<int>(gx);
      const double fx = gx - x0;
      const double v00 = grid[static_cast<std::size_t>(y0) * gw + x0];
      const double v01 = grid[static_cast<std::size_t>(y0) * gw + x0 + 1];
      const double v10 = grid[static_cast<std::size_t>(y0 + 1) * gw + x0];
      const double v11 = grid[static_cast<std::size_t>(y0 + 1) * gw + x0 + 1];
      field[static_cast<std::size_t>(r) * w + c] =
          v00 * (1 - fy) * (1 - fx) + v01 * (1 - fy) * fx + v10 * fy * (1 - fx) + v11 * fy * fx;
    }
  }
  return field;
}

struct Plateau {
  double row, col, radius, ramp, target;
};

}  // namespace detail

struct SceneParams {
  int lattice = 12;
  double lo = 40, hi = 210;
  int noise = 3;  // uniform +-noise per pixel
  std::vector<detail::Plateau> plateaus;
};

inline GrayImage scene(std::uint32_t seed, int h, int w, const SceneParams& p) {
  std::mt19937 rng(seed);
  auto field = detail::lattice_field(rng, h, w, p.lattice, p.lo, p.hi);
  GrayImage img(h, w);
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      double v = field[static_cast<std::size_t>(r) * w + c];
      for (const auto& pl : p.plateaus) {
        const double d = std::sqrt((r - pl.row) * (r - pl.row) + (c - pl.col) * (c - pl.col));
        double q = (pl.radius - d) / pl.ramp;
        if (q > 1) q = 1;
        if (q > 0) v = v * (1 - q) + pl.target * q;
      }
      if (p.noise > 0) v += detail::uniform(rng, -p.noise, p.noise);
      int iv = static_cast<int>(v + 0.5);
      if (iv < 0) iv = 0;
      if (iv > 255) iv = 255;
      img.at(r, c) = static_cast<std::uint8_t>(iv);
    }
  }
  return img;
}

/// The eight-scene benchmark suite (512x512 by default). "barbara" and
/// "peppers" are the complex scenes: big saturated regions, smooth
/// elsewhere.
inline std::vector<std::pair<std::string, GrayImage>> standard_suite(int size = 512) {
  const double s = size / 512.0;
  std::vector<std::pair<std::string, GrayImage>> suite;
  suite.emplace_back("lena", scene(101, size, size, {12, 40, 210, 3, {}}));
  suite.emplace_back("airplane",
                     scene(102, size, size,
                           {8, 60, 235, 2, {{0.30 * size, 0.62 * size, 85 * s, 30 * s, 70}}}));
  suite.emplace_back("baboon", scene(103, size, size, {20, 30, 225, 11, {}}));
  suite.emplace_back("barbara",
                     scene(104, size, size,
                           {10, 35, 215, 3,
                            {{0.35 * size, 0.30 * size, 95 * s, 12 * s, 2},
                             {0.70 * size, 0.72 * size, 75 * s, 12 * s, 3}}}));
  suite.emplace_back("jetplane", scene(105, size, size, {9, 55, 230, 3, {}}));
  suite.emplace_back("boat", scene(106, size, size, {14, 30, 215, 5, {}}));
  suite.emplace_back("peppers",
                     scene(107, size, size,
                           {10, 40, 220, 3,
                            {{0.32 * size, 0.60 * size, 105 * s, 12 * s, 253},
                             {0.72 * size, 0.25 * size, 85 * s, 12 * s, 252},
                             {0.15 * size, 0.15 * size, 45 * s, 10 * s, 2}}}));
  suite.emplace_back("lake", scene(108, size, size, {16, 25, 215, 7, {}}));
  return suite;
}

// Plain covers for property suites.

inline GrayImage constant(int h, int w, std::uint8_t value) { return GrayImage(h, w, value); }

inline GrayImage horizontal_gradient(int h, int w) {
  GrayImage img(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      img.at(r, c) = static_cast<std::uint8_t>(w > 1 ? c * 255 / (w - 1) : 0);
  return img;
}

inline GrayImage vertical_gradient(int h, int w) {
  GrayImage img(h, w);
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      img.at(r, c) = static_cast<std::uint8_t>(h > 1 ? r * 255 / (h - 1) : 0);
  return img;
}

inline GrayImage uniform_noise(std::uint32_t seed, int h, int w) {
  std::mt19937 rng(seed);
  GrayImage img(h, w);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng() & 0xFF);
  return img;
}

/// Smooth field with mild texture; the workhorse random cover.
inline GrayImage smooth_random(std::uint32_t seed, int h, int w, int noise = 3) {
  SceneParams p;
  p.lattice = 4 + static_cast<int>(seed % 5);
  p.lo = 30;
  p.hi = 225;
  p.noise = noise;
  return scene(seed, h, w, p);
}

inline GrayImage salt_pepper(std::uint32_t seed, int h, int w, int percent = 8) {
  std::mt19937 rng(seed);
  GrayImage img = smooth_random(seed ^ 0x9E3779B9u, h, w, 2);
  for (auto& p : img.pixels)
    if (static_cast<int>(rng() % 100) < percent) p = (rng() & 1) ? 255 : 0;
  return img;
}

}  // namespace dtle::synth
