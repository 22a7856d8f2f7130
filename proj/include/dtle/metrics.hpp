#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "dtle/errors.hpp"
#include "dtle/image.hpp"

namespace dtle {

/// Peak signal-to-noise ratio in dB, 10*log10(255^2 / MSE); +inf for
/// identical images.
inline double psnr(const GrayImage& a, const GrayImage& b) {
  if (a.height != b.height || a.width != b.width)
    throw ShapeError("PSNR needs images of identical dimensions");
  if (!a.valid() || !b.valid()) throw ParameterError("invalid image");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    const double d = static_cast<double>(a.pixels[i]) - static_cast<double>(b.pixels[i]);
    sum += d * d;
  }
  if (sum == 0.0) return std::numeric_limits<double>::infinity();
  const double mse = sum / static_cast<double>(a.pixels.size());
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

/// Average embedded bits per pixel.
inline double embedding_rate(std::size_t ec_bits, std::size_t pixel_count) {
  if (pixel_count == 0) throw ParameterError("embedding rate needs a nonzero pixel count");
  return static_cast<double>(ec_bits) / static_cast<double>(pixel_count);
}

/// Success percentage of embeddings: share of capacities meeting the
/// target, in percent.
inline double spe(const std::vector<std::size_t>& capacities, std::size_t target_ec) {
  if (capacities.empty()) throw ParameterError("SPE needs at least one capacity measurement");
  std::size_t ok = 0;
  for (auto c : capacities) ok += (c >= target_ec);
  return 100.0 * static_cast<double>(ok) / static_cast<double>(capacities.size());
}

}  // namespace dtle
