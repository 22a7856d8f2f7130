#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "dtle/bits.hpp"
#include "dtle/errors.hpp"
#include "dtle/pipeline.hpp"

namespace dtle {

/// Single-peak two-layer baseline on the five-bit plane: layer one expands
/// prediction error +1 upward against the mean of the three smallest
/// rhombus neighbours, layer two expands -1 downward against the mean of
/// the three largest. Net change per pixel is in {-1, 0, +1}, so a one-wide
/// guard band suffices.
struct TleScheme {
  static constexpr int kGuard = 1;
  static constexpr int kDefaultCut = 3;
  static constexpr int kMaxCut = 6;  // needs M >= 2
  static constexpr const char* kName = "tle";

  static std::pair<int, int> predict(const std::vector<std::uint8_t>& plane, int h, int w,
                                     int r, int c) {
    if (r < 1 || c < 1 || r + 1 >= h || c + 1 >= w)
      throw PositionError("predictor needs the four rhombus neighbours");
    const std::size_t i = static_cast<std::size_t>(r) * w + c;
    std::array<int, 4> z = {plane[i - w], plane[i - 1], plane[i + 1], plane[i + w]};
    std::sort(z.begin(), z.end());
    return {(z[0] + z[1] + z[2]) / 3, (z[1] + z[2] + z[3]) / 3};
  }

  template <class Source>
  static int embed_layer(int layer, int v, int p, Source& bits, int& consumed) {
    const int e = v - p;
    if (layer == 0) {
      if (e == 1) { ++consumed; return v + bits.next(); }
      if (e > 1) return v + 1;
      return v;  // e < 1
    }
    if (e == -1) { ++consumed; return v - bits.next(); }
    if (e < -1) return v - 1;
    return v;  // e > -1
  }

  struct Undo {
    int value;
    int bit;
  };

  static Undo extract_layer(int layer, int v, int p) {
    const int d = v - p;
    if (layer == 0) {
      if (d == 2) return {v - 1, 1};
      if (d == 1) return {v, 0};
      if (d >= 3) return {v - 1, -1};
      return {v, -1};  // d <= 0
    }
    if (d == -2) return {v + 1, 1};
    if (d == -1) return {v, 0};
    if (d <= -3) return {v + 1, -1};
    return {v, -1};  // d >= 0
  }
};

/// Rhombus predictor pair: mean of the three smallest and of the three
/// largest of the four direct neighbours.
inline std::pair<int, int> tle_predictors(const std::vector<std::uint8_t>& plane, int h, int w,
                                          int r, int c) {
  return TleScheme::predict(plane, h, w, r, c);
}

inline StegoResult tle_embed(const GrayImage& cover, const Bits& secret,
                             Options opt = {TleScheme::kDefaultCut, false}) {
  return embed<TleScheme>(cover, secret, opt);
}

inline ExtractResult tle_extract(const GrayImage& stego,
                                 Options opt = {TleScheme::kDefaultCut, false}) {
  return extract<TleScheme>(stego, opt);
}

inline CapacityReport tle_capacity(const GrayImage& cover,
                                   Options opt = {TleScheme::kDefaultCut, false},
                                   std::uint32_t seed = 0) {
  return capacity<TleScheme>(cover, opt, seed);
}

}  // namespace dtle
