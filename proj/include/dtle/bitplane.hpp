#pragma once

#include <cstdint>
#include <vector>

#include "dtle/errors.hpp"
#include "dtle/image.hpp"

namespace dtle {

/// An image split at bit position `cut`: hsb holds the top (8-cut) bits as a
/// plain value in [0, 2^(8-cut)-1], lsb the bottom `cut` bits.
struct PlanePair {
  int height = 0;
  int width = 0;
  int cut = 0;
  std::vector<std::uint8_t> hsb;
  std::vector<std::uint8_t> lsb;

  std::size_t cell_count() const { return static_cast<std::size_t>(height) * static_cast<std::size_t>(width); }
  int max_hsb() const { return 255 >> cut; }
};

inline PlanePair decompose(const GrayImage& img, int cut) {
  if (cut < 0 || cut > 7) throw ParameterError("bit-plane cut must be in [0,7]");
  if (!img.valid()) throw ParameterError("invalid image");
  PlanePair p;
  p.height = img.height;
  p.width = img.width;
  p.cut = cut;
  p.hsb.resize(img.pixels.size());
  p.lsb.resize(img.pixels.size());
  const std::uint8_t low_mask = static_cast<std::uint8_t>((1u << cut) - 1u);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    p.hsb[i] = static_cast<std::uint8_t>(img.pixels[i] >> cut);
    p.lsb[i] = static_cast<std::uint8_t>(img.pixels[i] & low_mask);
  }
  return p;
}

inline GrayImage recompose(const PlanePair& p) {
  if (p.cut < 0 || p.cut > 7) throw ParameterError("bit-plane cut must be in [0,7]");
  if (p.hsb.size() != p.cell_count() || p.lsb.size() != p.cell_count())
    throw RangeError("plane buffers do not match the stated dimensions");
  GrayImage img;
  img.height = p.height;
  img.width = p.width;
  img.pixels.resize(p.cell_count());
  const int hsb_max = p.max_hsb();
  const int lsb_max = (1 << p.cut) - 1;
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    if (p.hsb[i] > hsb_max || p.lsb[i] > lsb_max)
      throw RangeError("plane value outside its range");
    img.pixels[i] = static_cast<std::uint8_t>((p.hsb[i] << p.cut) | p.lsb[i]);
  }
  return img;
}

}  // namespace dtle
