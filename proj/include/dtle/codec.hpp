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

/// Double-peak two-layer scheme: both layers expand the prediction errors
/// {0, 1} and shift everything else by one, first against the low predictor
/// p1 (mean of the six smallest neighbours), then against the high
/// predictor p2 (mean of the six largest). Interior cells are pre-shifted
/// into [2, M-2] so the combined +-2 never leaves the plane.
struct DtleScheme {
  static constexpr int kGuard = 2;
  static constexpr int kDefaultCut = 2;
  static constexpr int kMaxCut = 5;  // needs M >= 4 for the guard band
  static constexpr const char* kName = "dtle";

  static std::pair<int, int> predict(const std::vector<std::uint8_t>& plane, int h, int w,
                                     int r, int c) {
    if (r < 1 || c < 1 || r + 1 >= h || c + 1 >= w)
      throw PositionError("predictor needs all eight neighbours");
    const std::size_t i = static_cast<std::size_t>(r) * w + c;
    std::array<int, 8> z = {plane[i - w - 1], plane[i - w], plane[i - w + 1],
                            plane[i - 1],     plane[i + 1],
                            plane[i + w - 1], plane[i + w], plane[i + w + 1]};
    std::sort(z.begin(), z.end());
    const int low = z[0] + z[1] + z[2] + z[3] + z[4] + z[5];
    const int high = z[2] + z[3] + z[4] + z[5] + z[6] + z[7];
    return {low / 6, high / 6};
  }

  template <class Source>
  static int embed_layer(int /*layer*/, int v, int p, Source& bits, int& consumed) {
    const int e = v - p;
    if (e == 1) { ++consumed; return v + bits.next(); }
    if (e > 1) return v + 1;
    if (e == 0) { ++consumed; return v - bits.next(); }
    return v - 1;  // e < 0
  }

  struct Undo {
    int value;
    int bit;  // -1 when the layer carried no payload bit
  };

  static Undo extract_layer(int /*layer*/, int v, int p) {
    const int d = v - p;
    if (d == 2) return {v - 1, 1};
    if (d == 1) return {v, 0};
    if (d == 0) return {v, 0};
    if (d == -1) return {v + 1, 1};
    if (d > 2) return {v - 1, -1};
    return {v + 1, -1};  // d < -1
  }
};

/// Sorted-neighbour predictor pair for one interior cell. p1 <= p2.
inline std::pair<int, int> predictor_pair(const std::vector<std::uint8_t>& plane, int h, int w,
                                          int r, int c) {
  return DtleScheme::predict(plane, h, w, r, c);
}

struct EmbedPixelResult {
  int value = 0;
  int bits_consumed = 0;
};

/// Runs both embedding layers on a single plane value. `max_value` is the
/// plane ceiling (63 for the default six-bit plane).
template <class Source>
EmbedPixelResult embed_pixel(int v, int p1, int p2, Source& bits, int max_value = 63) {
  EmbedPixelResult res;
  const int v1 = DtleScheme::embed_layer(0, v, p1, bits, res.bits_consumed);
  res.value = DtleScheme::embed_layer(1, v1, p2, bits, res.bits_consumed);
  if (res.value < 0 || res.value > max_value)
    throw OverflowError("embedding left the plane range; location map defect");
  return res;
}

struct ExtractPixelResult {
  int value = 0;
  int bit_count = 0;
  std::array<int, 2> bits{};  // in embedding order: first-layer bit first
};

/// Exact inverse of embed_pixel for the same predictor pair.
inline ExtractPixelResult extract_pixel(int v, int p1, int p2) {
  const auto undo2 = DtleScheme::extract_layer(1, v, p2);
  const auto undo1 = DtleScheme::extract_layer(0, undo2.value, p1);
  ExtractPixelResult res;
  res.value = undo1.value;
  if (undo1.bit >= 0) res.bits[res.bit_count++] = undo1.bit;
  if (undo2.bit >= 0) res.bits[res.bit_count++] = undo2.bit;
  return res;
}

inline StegoResult dtle_embed(const GrayImage& cover, const Bits& secret, const Options& opt = {}) {
  return embed<DtleScheme>(cover, secret, opt);
}

inline ExtractResult dtle_extract(const GrayImage& stego, const Options& opt = {}) {
  return extract<DtleScheme>(stego, opt);
}

inline CapacityReport dtle_capacity(const GrayImage& cover, const Options& opt = {},
                                    std::uint32_t seed = 0) {
  return capacity<DtleScheme>(cover, opt, seed);
}

inline bool dtle_is_complex(const GrayImage& cover, int cut = DtleScheme::kDefaultCut) {
  return is_complex<DtleScheme>(cover, cut);
}

}  // namespace dtle
