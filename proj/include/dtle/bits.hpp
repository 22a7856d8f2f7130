#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "dtle/errors.hpp"

namespace dtle {

/// Growable bit string, packed MSB-first within each byte. All multi-bit
/// integers written through it are big-endian, which is also the wire order
/// used by the stego header, the payload sections and the auxiliary info.
class Bits {
 public:
  Bits() = default;

  static Bits from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    if (bit_count > bytes.size() * 8)
      throw ParameterError("bit count exceeds the supplied byte buffer");
    Bits b;
    b.size_ = bit_count;
    b.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_count + 7) / 8));
    if (bit_count % 8 != 0 && !b.bytes_.empty())
      b.bytes_.back() &= static_cast<std::uint8_t>(0xFF << (8 - bit_count % 8));
    return b;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  int get(std::size_t i) const {
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1;
  }

  void push_back(int bit) {
    if ((size_ & 7) == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - (size_ & 7)));
    ++size_;
  }

  /// Appends the low `width` bits of `value`, most significant first.
  void append_uint(std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i) push_back(static_cast<int>((value >> i) & 1u));
  }

  std::uint64_t read_uint(std::size_t pos, int width) const {
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) v = (v << 1) | static_cast<std::uint64_t>(get(pos + i));
    return v;
  }

  void append(const Bits& other) {
    for (std::size_t i = 0; i < other.size_; ++i) push_back(other.get(i));
  }

  Bits slice(std::size_t pos, std::size_t count) const {
    Bits out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(get(pos + i));
    return out;
  }

  void reserve(std::size_t bit_count) { bytes_.reserve((bit_count + 7) / 8); }

  /// Packed representation; the final partial byte is zero-padded.
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool operator==(const Bits& o) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

/// Sequential reader over a Bits value.
class BitCursor {
 public:
  explicit BitCursor(const Bits& bits) : bits_(&bits) {}
  std::size_t remaining() const { return bits_->size() - pos_; }
  bool exhausted() const { return pos_ >= bits_->size(); }

  /// Next payload bit; once exhausted returns 0 and counts the read as
  /// padding (used by the atomic-pixel rule).
  int next() {
    if (pos_ < bits_->size()) return bits_->get(pos_++);
    ++padding_;
    return 0;
  }

  std::size_t padding() const { return padding_; }

 private:
  const Bits* bits_;
  std::size_t pos_ = 0;
  std::size_t padding_ = 0;
};

/// Deterministic pseudo-random bit source (mt19937 is fully specified, so a
/// given seed produces the same stream on every platform).
class RandomBitSource {
 public:
  explicit RandomBitSource(std::uint32_t seed) : rng_(seed) {}
  int next() { return static_cast<int>(rng_() & 1u); }

  Bits take(std::size_t count) {
    Bits b;
    b.reserve(count);
    for (std::size_t i = 0; i < count; ++i) b.push_back(next());
    return b;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace dtle
