#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dtle/bits.hpp"
#include "dtle/errors.hpp"
#include "dtle/image.hpp"

namespace dtle {

/// Median edge detector: gradient-adjusted prediction from the left, above
/// and above-left neighbours.
inline int med_predict(int left, int above, int above_left) {
  const int lo = left < above ? left : above;
  const int hi = left < above ? above : left;
  if (above_left <= lo) return hi;
  if (above_left >= hi) return lo;
  return left + above - above_left;
}

/// One clamped cell of the shifted difference image. Coordinates are
/// 1-based row/column, the convention used by every serialized position.
struct OverflowRecord {
  std::uint16_t row = 0;
  std::uint16_t col = 0;
  std::uint8_t excess = 0;

  bool operator==(const OverflowRecord&) const = default;
};

/// Side data required to invert the MED transform: the histogram-shift
/// magnitude plus the cells clamped at 255.
struct AuxInfo {
  std::uint8_t shift = 0;
  bool overflow_flag = false;
  std::vector<OverflowRecord> records;

  std::size_t bit_size() const { return 9 + 40 * records.size(); }

  /// Wire layout: shift(8) | flag(1) | records x (row16 | col16 | excess8),
  /// big-endian bit order. The record count travels in the stego header.
  Bits to_bits() const {
    Bits b;
    b.reserve(bit_size());
    b.append_uint(shift, 8);
    b.push_back(overflow_flag ? 1 : 0);
    for (const auto& rec : records) {
      b.append_uint(rec.row, 16);
      b.append_uint(rec.col, 16);
      b.append_uint(rec.excess, 8);
    }
    return b;
  }

  static AuxInfo parse(const Bits& bits, std::size_t record_count, int height, int width) {
    if (bits.size() != 9 + 40 * record_count)
      throw CorruptionError("auxiliary info length mismatch");
    AuxInfo aux;
    aux.shift = static_cast<std::uint8_t>(bits.read_uint(0, 8));
    aux.overflow_flag = bits.get(8) != 0;
    if (aux.overflow_flag != (record_count > 0))
      throw CorruptionError("overflow flag disagrees with record count");
    std::size_t pos = 9;
    aux.records.reserve(record_count);
    for (std::size_t i = 0; i < record_count; ++i) {
      OverflowRecord rec;
      rec.row = static_cast<std::uint16_t>(bits.read_uint(pos, 16));
      rec.col = static_cast<std::uint16_t>(bits.read_uint(pos + 16, 16));
      rec.excess = static_cast<std::uint8_t>(bits.read_uint(pos + 32, 8));
      pos += 40;
      if (rec.row < 2 || rec.col < 2 || rec.row > height || rec.col > width)
        throw CorruptionError("overflow record outside the transformed region");
      aux.records.push_back(rec);
    }
    return aux;
  }

  bool operator==(const AuxInfo&) const = default;
};

/// Forward MED transform. Row 0 and column 0 are copied verbatim; every
/// other cell becomes the prediction error shifted into [0,255], with cells
/// reaching 255 clamped and recorded (excess may be 0 for an exact 255).
inline std::pair<DiffImage, AuxInfo> med_forward(const GrayImage& img) {
  if (!img.valid() || img.height < 2 || img.width < 2)
    throw ParameterError("MED transform needs a valid image of at least 2x2");
  const int h = img.height, w = img.width;
  std::vector<int> diff(img.pixel_count(), 0);
  int min_diff = 0;
  for (int r = 1; r < h; ++r) {
    for (int c = 1; c < w; ++c) {
      const int pred = med_predict(img.at(r, c - 1), img.at(r - 1, c), img.at(r - 1, c - 1));
      const int d = static_cast<int>(img.at(r, c)) - pred;
      diff[static_cast<std::size_t>(r) * w + c] = d;
      if (d < min_diff) min_diff = d;
    }
  }

  AuxInfo aux;
  aux.shift = static_cast<std::uint8_t>(-min_diff);  // 0 when all errors are nonnegative

  DiffImage out(h, w);
  for (int r = 0; r < h; ++r) out.at(r, 0) = img.at(r, 0);
  for (int c = 0; c < w; ++c) out.at(0, c) = img.at(0, c);
  for (int r = 1; r < h; ++r) {
    for (int c = 1; c < w; ++c) {
      int shifted = diff[static_cast<std::size_t>(r) * w + c] + aux.shift;
      if (shifted >= 255) {
        aux.records.push_back({static_cast<std::uint16_t>(r + 1), static_cast<std::uint16_t>(c + 1),
                               static_cast<std::uint8_t>(shifted - 255)});
        shifted = 255;
      }
      out.at(r, c) = static_cast<std::uint8_t>(shifted);
    }
  }
  aux.overflow_flag = !aux.records.empty();
  return {std::move(out), std::move(aux)};
}

/// Exact inverse of med_forward. Strictly sequential: each pixel is rebuilt
/// from already-recovered neighbours.
inline GrayImage med_inverse(const DiffImage& diff, const AuxInfo& aux) {
  if (!diff.valid() || diff.height < 2 || diff.width < 2)
    throw ParameterError("MED inverse needs a valid image of at least 2x2");
  const int h = diff.height, w = diff.width;
  std::unordered_map<std::uint32_t, int> excess;
  for (const auto& rec : aux.records) {
    if (rec.row < 2 || rec.col < 2 || rec.row > h || rec.col > w)
      throw CorruptionError("overflow record outside the transformed region");
    excess[(static_cast<std::uint32_t>(rec.row - 1) << 16) | static_cast<std::uint32_t>(rec.col - 1)] = rec.excess;
  }

  GrayImage img(h, w);
  for (int r = 0; r < h; ++r) img.at(r, 0) = diff.at(r, 0);
  for (int c = 0; c < w; ++c) img.at(0, c) = diff.at(0, c);
  for (int r = 1; r < h; ++r) {
    for (int c = 1; c < w; ++c) {
      int value = diff.at(r, c);
      if (!excess.empty()) {
        auto it = excess.find((static_cast<std::uint32_t>(r) << 16) | static_cast<std::uint32_t>(c));
        if (it != excess.end()) value += it->second;
      }
      const int pred = med_predict(img.at(r, c - 1), img.at(r - 1, c), img.at(r - 1, c - 1));
      const int x = value - aux.shift + pred;
      if (x < 0 || x > 255)
        throw CorruptionError("MED inverse produced a value outside [0,255]");
      img.at(r, c) = static_cast<std::uint8_t>(x);
    }
  }
  return img;
}

}  // namespace dtle
