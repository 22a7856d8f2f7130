#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dtle/bits.hpp"
#include "dtle/errors.hpp"

namespace dtle {

// Adaptive order-0 arithmetic coder over the ternary alphabet {0,1,2}.
//
// The layout is pinned so the compressed length is reproducible anywhere:
// 32-bit low/high registers, symbol counts start at 1, all three are halved
// (rounding up) whenever their sum reaches 2^16, and the encoder terminates
// with the classic bit-plus-follow flush. The decoder reads 0 for every bit
// past the end of the stream, which the flush makes safe.

namespace detail {

constexpr std::uint32_t kArithHalf = 0x80000000u;
constexpr std::uint32_t kArithQuarter = 0x40000000u;
constexpr std::uint32_t kArithThreeQuarters = 0xC0000000u;
constexpr std::uint32_t kArithMaxTotal = 1u << 16;

struct TernaryModel {
  std::array<std::uint32_t, 3> freq{1, 1, 1};

  std::uint32_t total() const { return freq[0] + freq[1] + freq[2]; }

  void update(int sym) {
    ++freq[sym];
    if (total() >= kArithMaxTotal)
      for (auto& f : freq) f = (f + 1) >> 1;
  }
};

}  // namespace detail

class TernaryEncoder {
 public:
  void encode(int sym) {
    const std::uint32_t total = model_.total();
    std::uint32_t cum_lo = 0;
    for (int s = 0; s < sym; ++s) cum_lo += model_.freq[s];
    const std::uint32_t cum_hi = cum_lo + model_.freq[sym];

    const std::uint64_t range = static_cast<std::uint64_t>(high_) - low_ + 1;
    high_ = low_ + static_cast<std::uint32_t>(range * cum_hi / total) - 1;
    low_ = low_ + static_cast<std::uint32_t>(range * cum_lo / total);

    while (true) {
      if (high_ < detail::kArithHalf) {
        emit(0);
      } else if (low_ >= detail::kArithHalf) {
        emit(1);
        low_ -= detail::kArithHalf;
        high_ -= detail::kArithHalf;
      } else if (low_ >= detail::kArithQuarter && high_ < detail::kArithThreeQuarters) {
        ++pending_;
        low_ -= detail::kArithQuarter;
        high_ -= detail::kArithQuarter;
      } else {
        break;
      }
      low_ <<= 1;
      high_ = (high_ << 1) | 1;
    }
    model_.update(sym);
  }

  Bits finish() {
    ++pending_;
    emit(low_ < detail::kArithQuarter ? 0 : 1);
    return std::move(out_);
  }

 private:
  void emit(int bit) {
    out_.push_back(bit);
    for (; pending_ > 0; --pending_) out_.push_back(bit ^ 1);
  }

  detail::TernaryModel model_;
  std::uint32_t low_ = 0;
  std::uint32_t high_ = 0xFFFFFFFFu;
  std::uint64_t pending_ = 0;
  Bits out_;
};

class TernaryDecoder {
 public:
  explicit TernaryDecoder(const Bits& bits) : bits_(&bits) {
    for (int i = 0; i < 32; ++i) value_ = (value_ << 1) | next_bit();
  }

  int decode() {
    const std::uint32_t total = model_.total();
    const std::uint64_t range = static_cast<std::uint64_t>(high_) - low_ + 1;
    const std::uint32_t scaled =
        static_cast<std::uint32_t>(((static_cast<std::uint64_t>(value_ - low_) + 1) * total - 1) / range);

    int sym = 0;
    std::uint32_t cum_lo = 0;
    while (cum_lo + model_.freq[sym] <= scaled) {
      cum_lo += model_.freq[sym];
      ++sym;
    }
    const std::uint32_t cum_hi = cum_lo + model_.freq[sym];

    high_ = low_ + static_cast<std::uint32_t>(range * cum_hi / total) - 1;
    low_ = low_ + static_cast<std::uint32_t>(range * cum_lo / total);

    while (true) {
      if (high_ < detail::kArithHalf) {
        // nothing to subtract
      } else if (low_ >= detail::kArithHalf) {
        value_ -= detail::kArithHalf;
        low_ -= detail::kArithHalf;
        high_ -= detail::kArithHalf;
      } else if (low_ >= detail::kArithQuarter && high_ < detail::kArithThreeQuarters) {
        value_ -= detail::kArithQuarter;
        low_ -= detail::kArithQuarter;
        high_ -= detail::kArithQuarter;
      } else {
        break;
      }
      low_ <<= 1;
      high_ = (high_ << 1) | 1;
      value_ = (value_ << 1) | next_bit();
    }
    model_.update(sym);
    return sym;
  }

 private:
  std::uint32_t next_bit() {
    if (pos_ < bits_->size()) return static_cast<std::uint32_t>(bits_->get(pos_++));
    return 0;
  }

  const Bits* bits_;
  std::size_t pos_ = 0;
  detail::TernaryModel model_;
  std::uint32_t low_ = 0;
  std::uint32_t high_ = 0xFFFFFFFFu;
  std::uint32_t value_ = 0;
};

inline Bits arith_compress(const std::vector<std::uint8_t>& symbols) {
  if (symbols.empty()) return {};
  TernaryEncoder enc;
  for (auto s : symbols) {
    if (s > 2) throw ParameterError("ternary coder got a symbol outside {0,1,2}");
    enc.encode(s);
  }
  return enc.finish();
}

inline std::vector<std::uint8_t> arith_decompress(const Bits& bits, std::size_t symbol_count) {
  if (symbol_count == 0) return {};
  TernaryDecoder dec(bits);
  std::vector<std::uint8_t> out(symbol_count);
  for (auto& s : out) s = static_cast<std::uint8_t>(dec.decode());
  return out;
}

}  // namespace dtle
