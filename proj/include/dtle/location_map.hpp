#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dtle/arith.hpp"
#include "dtle/bits.hpp"
#include "dtle/errors.hpp"

namespace dtle {

/// Per-cell overflow-prevention map over an HSB plane. Symbol 0 marks an
/// untouched cell; symbols 1..guard mark cells pre-shifted away from the
/// plane boundaries so embedding can never leave [0, M].
struct LocationMap {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> cells;

  std::size_t cell_count() const { return static_cast<std::size_t>(height) * static_cast<std::size_t>(width); }

  std::uint8_t at(int r, int c) const { return cells[static_cast<std::size_t>(r) * width + c]; }
  std::uint8_t& at(int r, int c) { return cells[static_cast<std::size_t>(r) * width + c]; }

  std::size_t marked_count() const {
    std::size_t n = 0;
    for (auto s : cells) n += (s != 0);
    return n;
  }

  bool operator==(const LocationMap&) const = default;
};

/// Arithmetic-coded map plus the exact bit length L_CLM.
struct CompressedMap {
  Bits bits;
  std::size_t bit_length = 0;
  std::size_t cell_count = 0;
};

/// Shifts saturation-adjacent interior cells into the safe band
/// [guard, M-guard] and records which ring each came from. Border rows and
/// columns never embed, so they are left alone and carry symbol 0.
/// With guard=2 and M=63: 63->61 (sym 1), 62->61 (sym 2), 0->2 (sym 1),
/// 1->2 (sym 2); guard=1 shifts only the exact boundary values by one.
inline std::pair<std::vector<std::uint8_t>, LocationMap> build_and_shift(
    const std::vector<std::uint8_t>& hsb, int height, int width, int max_value, int guard) {
  if (guard < 1 || max_value < 2 * guard)
    throw ParameterError("plane range too small for the requested guard band");
  if (hsb.size() != static_cast<std::size_t>(height) * static_cast<std::size_t>(width))
    throw ShapeError("plane buffer does not match the stated dimensions");

  std::vector<std::uint8_t> shifted = hsb;
  LocationMap lm;
  lm.height = height;
  lm.width = width;
  lm.cells.assign(hsb.size(), 0);
  for (int r = 1; r + 1 < height; ++r) {
    for (int c = 1; c + 1 < width; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * width + c;
      const int v = hsb[i];
      if (v > max_value - guard) {
        shifted[i] = static_cast<std::uint8_t>(max_value - guard);
        lm.cells[i] = static_cast<std::uint8_t>(max_value - v + 1);
      } else if (v < guard) {
        shifted[i] = static_cast<std::uint8_t>(guard);
        lm.cells[i] = static_cast<std::uint8_t>(v + 1);
      }
    }
  }
  return {std::move(shifted), std::move(lm)};
}

/// Inverse of build_and_shift, applied after all embedding has been
/// reversed. A marked cell that no longer sits on a guard value means the
/// stego data was inconsistent.
inline std::vector<std::uint8_t> restore_plane(const std::vector<std::uint8_t>& shifted,
                                               const LocationMap& lm, int max_value, int guard) {
  if (guard < 1 || max_value < 2 * guard)
    throw ParameterError("plane range too small for the requested guard band");
  if (shifted.size() != lm.cell_count())
    throw ShapeError("plane and location map sizes differ");

  std::vector<std::uint8_t> out = shifted;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int sym = lm.cells[i];
    if (sym == 0) continue;
    if (sym > guard) throw CorruptionError("location map symbol outside the guard range");
    const int v = out[i];
    if (v == max_value - guard) {
      out[i] = static_cast<std::uint8_t>(max_value - (sym - 1));
    } else if (v == guard) {
      out[i] = static_cast<std::uint8_t>(sym - 1);
    } else {
      throw CorruptionError("marked cell is not on a guard value");
    }
  }
  return out;
}

/// Deterministic lossless compression of the full-resolution map,
/// row-major. Sparse maps cost a few bits per thousand cells.
inline CompressedMap compress(const LocationMap& lm) {
  if (lm.cells.size() != lm.cell_count())
    throw ShapeError("location map buffer does not match its dimensions");
  CompressedMap cm;
  cm.cell_count = lm.cells.size();
  cm.bits = arith_compress(lm.cells);
  cm.bit_length = cm.bits.size();
  return cm;
}

inline LocationMap decompress(const Bits& bits, std::size_t cell_count, int height, int width) {
  if (cell_count != static_cast<std::size_t>(height) * static_cast<std::size_t>(width))
    throw ParameterError("cell count does not match the map dimensions");
  LocationMap lm;
  lm.height = height;
  lm.width = width;
  lm.cells = arith_decompress(bits, cell_count);
  return lm;
}

}  // namespace dtle
