#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtle {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file (PGM, packed secret, ...). Carries the byte offset
/// at which parsing gave up.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t byte_offset)
      : Error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Argument outside its documented domain (e.g. bit-plane cut out of range).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A value left the range its container permits (plane invariant broken).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Two rasters that must agree in size do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A per-pixel operation was asked about a border cell it cannot serve.
class PositionError : public Error {
 public:
  using Error::Error;
};

/// Embedding pushed a plane value outside [0, M]; indicates a location-map
/// defect or a caller bypassing the pre-shift.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Stego data that cannot be parsed back consistently: tampered image,
/// wrong parameters, or a non-stego input.
class CorruptionError : public Error {
 public:
  using Error::Error;
};

/// The cover cannot hold the full payload.
class InsufficientCapacityError : public Error {
 public:
  InsufficientCapacityError(std::size_t needed_bits, std::size_t available_bits)
      : Error("payload needs " + std::to_string(needed_bits) +
              " bits but cover yields only " + std::to_string(available_bits)),
        needed_(needed_bits),
        available_(available_bits) {}
  std::size_t needed() const { return needed_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t needed_;
  std::size_t available_;
};

/// The image border cannot hold the fixed-size stego header.
class HeaderSpaceError : public Error {
 public:
  using Error::Error;
};

}  // namespace dtle
