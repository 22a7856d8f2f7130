#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "dtle/bitplane.hpp"
#include "dtle/bits.hpp"
#include "dtle/errors.hpp"
#include "dtle/image.hpp"
#include "dtle/location_map.hpp"
#include "dtle/med.hpp"
#include "dtle/metrics.hpp"
#include "dtle/scan.hpp"

namespace dtle {

struct Options {
  int cut = 2;
  bool use_med = false;
};

/// Fixed 112-bit border header:
/// k_end(32) | l_clm(24) | l_s(32) | n_over(24), MSB first.
struct StegoHeader {
  static constexpr std::size_t kBits = 112;

  std::uint32_t k_end = 0;   // 1-based scan index of the last processed pixel
  std::uint32_t l_clm = 0;   // compressed location map length, bits
  std::uint32_t l_s = 0;     // secret length, bits
  std::uint32_t n_over = 0;  // MED overflow record count

  Bits pack() const {
    Bits b;
    b.append_uint(k_end, 32);
    b.append_uint(l_clm, 24);
    b.append_uint(l_s, 32);
    b.append_uint(n_over, 24);
    return b;
  }

  static StegoHeader unpack(const Bits& bits) {
    if (bits.size() != kBits) throw CorruptionError("bad header length");
    StegoHeader h;
    h.k_end = static_cast<std::uint32_t>(bits.read_uint(0, 32));
    h.l_clm = static_cast<std::uint32_t>(bits.read_uint(32, 24));
    h.l_s = static_cast<std::uint32_t>(bits.read_uint(56, 32));
    h.n_over = static_cast<std::uint32_t>(bits.read_uint(88, 24));
    return h;
  }
};

struct StegoResult {
  GrayImage stego;
  std::size_t ec = 0;          // embedded secret bits
  std::size_t slots_used = 0;  // payload bits + padding
  double psnr_original = 0.0;  // vs the input cover
  double psnr_cover = 0.0;     // vs the embedding-domain cover (MED output when enabled)
  std::uint32_t k_end = 0;
  std::size_t l_clm = 0;
  std::size_t aux_bits = 0;
  std::size_t n_over = 0;
};

struct ExtractResult {
  Bits secret;
  GrayImage original;
};

struct CapacityReport {
  std::size_t max_secret_bits = 0;
  std::size_t overhead_bits = 0;
  std::size_t slot_count = 0;
  bool header_fits = false;
  std::size_t l_clm = 0;
  std::size_t aux_bits = 0;
};

namespace detail {

/// Border traversal order: row 0 left to right, then the last row, then
/// column 0 top to bottom and the last column (corners visited once, with
/// the first/last rows).
inline std::vector<ScanOrder::Pos> border_cells(int h, int w) {
  std::vector<ScanOrder::Pos> cells;
  cells.reserve(2 * (h + w) - 4);
  for (int c = 0; c < w; ++c) cells.push_back({0, static_cast<std::uint16_t>(c)});
  for (int c = 0; c < w; ++c) cells.push_back({static_cast<std::uint16_t>(h - 1), static_cast<std::uint16_t>(c)});
  for (int r = 1; r + 1 < h; ++r) cells.push_back({static_cast<std::uint16_t>(r), 0});
  for (int r = 1; r + 1 < h; ++r) cells.push_back({static_cast<std::uint16_t>(r), static_cast<std::uint16_t>(w - 1)});
  return cells;
}

inline std::size_t border_lsb_bits(int h, int w, int cut) {
  return static_cast<std::size_t>(cut) * (2 * (static_cast<std::size_t>(h) + w) - 4);
}

/// First `count` LSB-plane bits along the border traversal, each cell
/// contributing its `cut` low bits MSB first.
inline Bits read_border_lsb(const PlanePair& planes, std::size_t count) {
  Bits out;
  out.reserve(count);
  for (const auto& cell : border_cells(planes.height, planes.width)) {
    const std::uint8_t v = planes.lsb[static_cast<std::size_t>(cell.row) * planes.width + cell.col];
    for (int k = planes.cut - 1; k >= 0; --k) {
      out.push_back((v >> k) & 1);
      if (out.size() == count) return out;
    }
  }
  if (out.size() < count) throw HeaderSpaceError("border has fewer LSB bits than requested");
  return out;
}

inline void write_border_lsb(PlanePair& planes, const Bits& bits) {
  std::size_t pos = 0;
  for (const auto& cell : border_cells(planes.height, planes.width)) {
    if (pos == bits.size()) return;
    std::uint8_t& v = planes.lsb[static_cast<std::size_t>(cell.row) * planes.width + cell.col];
    for (int k = planes.cut - 1; k >= 0 && pos < bits.size(); --k) {
      const std::uint8_t mask = static_cast<std::uint8_t>(1u << k);
      v = static_cast<std::uint8_t>(bits.get(pos++) ? (v | mask) : (v & ~mask));
    }
  }
  if (pos < bits.size()) throw HeaderSpaceError("border has fewer LSB bits than requested");
}

template <class Scheme>
void check_image_and_cut(const GrayImage& img, int cut) {
  if (!img.valid()) throw ParameterError("invalid image");
  if (img.height < 3 || img.width < 3)
    throw ParameterError("codec needs at least a 3x3 image");
  if (img.height > 65535 || img.width > 65535)
    throw ParameterError("image dimensions exceed the 16-bit position encoding");
  if (cut < 0 || cut > 7) throw ParameterError("bit-plane cut must be in [0,7]");
  if (cut > Scheme::kMaxCut)
    throw ParameterError("HSB plane too small for this scheme's guard band");
}

/// Embeds payload bits over the scan order until the source is exhausted.
/// Every processed pixel runs both layers; a layer demanding a bit after
/// exhaustion gets a dummy 0 (the source counts it as padding). Returns the
/// 1-based index of the last processed position.
template <class Scheme, class Source>
std::uint32_t walk_embed(std::vector<std::uint8_t>& plane, int h, int w, int max_value,
                         const ScanOrder& order, Source& src, std::size_t payload_bits,
                         std::size_t* consumed_out) {
  std::uint32_t k_end = 0;
  std::size_t consumed = 0;
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    if (consumed >= payload_bits) break;
    const auto [r, c] = order.positions[idx];
    const std::size_t cell = static_cast<std::size_t>(r) * w + c;
    const auto [p1, p2] = Scheme::predict(plane, h, w, r, c);
    int took = 0;
    const int v1 = Scheme::embed_layer(0, plane[cell], p1, src, took);
    const int v2 = Scheme::embed_layer(1, v1, p2, src, took);
    if (v2 < 0 || v2 > max_value)
      throw OverflowError("embedding left the plane range; location map defect");
    plane[cell] = static_cast<std::uint8_t>(v2);
    consumed += static_cast<std::size_t>(took);
    k_end = static_cast<std::uint32_t>(idx + 1);
  }
  if (consumed_out) *consumed_out = consumed;
  return k_end;
}

}  // namespace detail

/// True when the cover's location map would mark more than 5% of interior
/// cells, the regime where MED pre-processing pays off.
template <class Scheme>
bool is_complex(const GrayImage& cover, int cut) {
  detail::check_image_and_cut<Scheme>(cover, cut);
  const PlanePair planes = decompose(cover, cut);
  auto [shifted, lm] = build_and_shift(planes.hsb, planes.height, planes.width,
                                       planes.max_hsb(), Scheme::kGuard);
  (void)shifted;
  const std::size_t interior =
      static_cast<std::size_t>(cover.height - 2) * static_cast<std::size_t>(cover.width - 2);
  return lm.marked_count() * 20 > interior;
}

template <class Scheme>
StegoResult embed(const GrayImage& cover, const Bits& secret, const Options& opt) {
  detail::check_image_and_cut<Scheme>(cover, opt.cut);
  if (detail::border_lsb_bits(cover.height, cover.width, opt.cut) < StegoHeader::kBits)
    throw HeaderSpaceError("border LSB bits cannot hold the 112-bit header");
  if (secret.size() >= (std::uint64_t{1} << 32))
    throw ParameterError("secret exceeds the 32-bit length field");

  GrayImage domain = cover;
  AuxInfo aux;
  if (opt.use_med) {
    auto fwd = med_forward(cover);
    domain = std::move(fwd.first);
    aux = std::move(fwd.second);
  }
  if (aux.records.size() >= (1u << 24))
    throw HeaderSpaceError("overflow record count exceeds the 24-bit header field");

  PlanePair planes = decompose(domain, opt.cut);
  const int max_value = planes.max_hsb();
  auto [plane, lm] = build_and_shift(planes.hsb, planes.height, planes.width, max_value, Scheme::kGuard);
  const CompressedMap clm = compress(lm);
  if (clm.bit_length >= (1u << 24))
    throw HeaderSpaceError("compressed location map exceeds the 24-bit header field");

  const Bits border_original = detail::read_border_lsb(planes, StegoHeader::kBits);

  Bits payload;
  payload.reserve(secret.size() + StegoHeader::kBits + clm.bit_length + aux.bit_size());
  payload.append(secret);
  payload.append(border_original);
  payload.append(clm.bits);
  payload.append(aux.to_bits());

  const ScanOrder order = ScanOrder::make(cover.height, cover.width);
  BitCursor src(payload);
  std::size_t consumed = 0;
  const std::uint32_t k_end = detail::walk_embed<Scheme>(plane, planes.height, planes.width,
                                                         max_value, order, src, payload.size(), &consumed);
  if (consumed < payload.size())
    throw InsufficientCapacityError(payload.size(), consumed);

  StegoHeader header;
  header.k_end = k_end;
  header.l_clm = static_cast<std::uint32_t>(clm.bit_length);
  header.l_s = static_cast<std::uint32_t>(secret.size());
  header.n_over = static_cast<std::uint32_t>(aux.records.size());
  detail::write_border_lsb(planes, header.pack());

  planes.hsb = std::move(plane);
  StegoResult result;
  result.stego = recompose(planes);
  result.ec = secret.size();
  result.slots_used = consumed;  // includes the dummy pad bit, if any
  result.psnr_original = psnr(result.stego, cover);
  result.psnr_cover = psnr(result.stego, domain);
  result.k_end = k_end;
  result.l_clm = clm.bit_length;
  result.aux_bits = aux.bit_size();
  result.n_over = aux.records.size();
  return result;
}

template <class Scheme>
ExtractResult extract(const GrayImage& stego, const Options& opt) {
  detail::check_image_and_cut<Scheme>(stego, opt.cut);
  if (detail::border_lsb_bits(stego.height, stego.width, opt.cut) < StegoHeader::kBits)
    throw CorruptionError("image too small to carry a stego header");

  PlanePair planes = decompose(stego, opt.cut);
  const int max_value = planes.max_hsb();
  const StegoHeader header = StegoHeader::unpack(detail::read_border_lsb(planes, StegoHeader::kBits));

  const ScanOrder order = ScanOrder::make(stego.height, stego.width);
  if (header.k_end > order.size())
    throw CorruptionError("header scan index exceeds the image scan order");

  const std::size_t total_payload = static_cast<std::size_t>(header.l_s) + StegoHeader::kBits +
                                    header.l_clm + 9 + 40 * static_cast<std::size_t>(header.n_over);
  if (total_payload > 2 * static_cast<std::size_t>(header.k_end))
    throw CorruptionError("declared payload cannot fit in the processed pixels");

  // Reverse walk: undo both layers per pixel, collecting bits in reverse
  // consumption order (second layer first). Contexts match embedding
  // because later positions are already restored, earlier ones untouched.
  std::vector<std::uint8_t> plane = planes.hsb;
  std::vector<std::uint8_t> reversed;
  reversed.reserve(2 * header.k_end);
  for (std::size_t idx = header.k_end; idx-- > 0;) {
    const auto [r, c] = order.positions[idx];
    const std::size_t cell = static_cast<std::size_t>(r) * planes.width + c;
    const auto [p1, p2] = Scheme::predict(plane, planes.height, planes.width, r, c);
    const auto undo2 = Scheme::extract_layer(1, plane[cell], p2);
    const auto undo1 = Scheme::extract_layer(0, undo2.value, p1);
    if (undo1.value < 0 || undo1.value > max_value)
      throw CorruptionError("reversed pixel left the plane range");
    plane[cell] = static_cast<std::uint8_t>(undo1.value);
    if (undo2.bit >= 0) reversed.push_back(static_cast<std::uint8_t>(undo2.bit));
    if (undo1.bit >= 0) reversed.push_back(static_cast<std::uint8_t>(undo1.bit));
  }

  // The embedder stops within one bit of the payload end (atomic pixels),
  // so anything else signals corruption.
  if (reversed.size() != total_payload && reversed.size() != total_payload + 1)
    throw CorruptionError("recovered bit count disagrees with the header");

  // Forward payload = collection order un-reversed, truncated to the
  // declared length (drops the possible trailing dummy pad bit).
  Bits payload;
  payload.reserve(total_payload);
  for (std::size_t i = 0; i < total_payload; ++i)
    payload.push_back(reversed[reversed.size() - 1 - i]);

  std::size_t pos = 0;
  Bits secret = payload.slice(pos, header.l_s);
  pos += header.l_s;
  const Bits border_original = payload.slice(pos, StegoHeader::kBits);
  pos += StegoHeader::kBits;
  const Bits clm_bits = payload.slice(pos, header.l_clm);
  pos += header.l_clm;
  const Bits aux_bits = payload.slice(pos, 9 + 40 * static_cast<std::size_t>(header.n_over));
  const AuxInfo aux = AuxInfo::parse(aux_bits, header.n_over, planes.height, planes.width);

  detail::write_border_lsb(planes, border_original);
  const LocationMap lm = decompress(clm_bits, planes.cell_count(), planes.height, planes.width);
  planes.hsb = restore_plane(plane, lm, max_value, Scheme::kGuard);

  GrayImage domain = recompose(planes);
  ExtractResult result;
  result.secret = std::move(secret);
  result.original = opt.use_med ? med_inverse(domain, aux) : std::move(domain);
  return result;
}

/// Dry run with a seeded pseudo-random bit source over the whole scan
/// order. Reported capacity is what a real embed of that many secret bits
/// will consume to within a handful of bits (embedded values feed later
/// prediction contexts, hence the fixed-seed convention).
template <class Scheme>
CapacityReport capacity(const GrayImage& cover, const Options& opt, std::uint32_t seed = 0) {
  detail::check_image_and_cut<Scheme>(cover, opt.cut);

  GrayImage domain = cover;
  AuxInfo aux;
  if (opt.use_med) {
    auto fwd = med_forward(cover);
    domain = std::move(fwd.first);
    aux = std::move(fwd.second);
  }
  PlanePair planes = decompose(domain, opt.cut);
  const int max_value = planes.max_hsb();
  auto [plane, lm] = build_and_shift(planes.hsb, planes.height, planes.width, max_value, Scheme::kGuard);
  const CompressedMap clm = compress(lm);

  const ScanOrder order = ScanOrder::make(cover.height, cover.width);
  RandomBitSource src(seed);
  std::size_t slots = 0;
  detail::walk_embed<Scheme>(plane, planes.height, planes.width, max_value, order, src,
                             std::numeric_limits<std::size_t>::max(), &slots);

  CapacityReport report;
  report.slot_count = slots;
  report.l_clm = clm.bit_length;
  report.aux_bits = aux.bit_size();
  report.overhead_bits = StegoHeader::kBits + clm.bit_length + aux.bit_size();
  report.header_fits =
      detail::border_lsb_bits(cover.height, cover.width, opt.cut) >= StegoHeader::kBits &&
      clm.bit_length < (1u << 24) && aux.records.size() < (1u << 24);
  report.max_secret_bits =
      (report.header_fits && slots > report.overhead_bits) ? slots - report.overhead_bits : 0;
  return report;
}

}  // namespace dtle
