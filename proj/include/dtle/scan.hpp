#pragma once

#include <cstdint>
#include <vector>

#include "dtle/errors.hpp"

namespace dtle {

/// Chessboard embedding order over the interior of an h x w raster. The two
/// chessboard colours are processed one after the other, each colour split
/// into its odd-row and even-row halves (row parity counted 1-based, as are
/// the colours), raster order inside every phase. Border rows/columns are
/// excluded; they carry the header. The order depends on (h, w) only, so
/// both ends of the channel can rebuild it.
struct ScanOrder {
  struct Pos {
    std::uint16_t row = 0;  // 0-based
    std::uint16_t col = 0;
  };

  std::vector<Pos> positions;

  /// Phase of a cell: 0 = first-colour odd rows, 1 = first-colour even
  /// rows, 2 = second-colour odd rows, 3 = second-colour even rows.
  static int phase(int r, int c) {
    const bool first_colour = ((r + c) % 2) == 0;  // (i+j) even, 1-based
    const bool odd_row = (r % 2) == 0;             // i odd, 1-based
    return (first_colour ? 0 : 2) + (odd_row ? 0 : 1);
  }

  static ScanOrder make(int height, int width) {
    if (height < 3 || width < 3)
      throw ParameterError("scan order needs at least a 3x3 raster");
    ScanOrder order;
    order.positions.reserve(static_cast<std::size_t>(height - 2) * static_cast<std::size_t>(width - 2));
    for (int ph = 0; ph < 4; ++ph)
      for (int r = 1; r + 1 < height; ++r)
        for (int c = 1; c + 1 < width; ++c)
          if (phase(r, c) == ph)
            order.positions.push_back({static_cast<std::uint16_t>(r), static_cast<std::uint16_t>(c)});
    return order;
  }

  std::size_t size() const { return positions.size(); }
};

}  // namespace dtle
