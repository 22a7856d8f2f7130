#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dtle/codec.hpp"
#include "dtle/metrics.hpp"
#include "dtle/tle.hpp"

namespace dtle {

struct SchemeVariant {
  bool tle = false;
  bool use_med = false;
  int cut = 2;
  std::string name;  // display name in CSV rows
};

inline std::vector<SchemeVariant> canonical_variants(int dtle_cut = DtleScheme::kDefaultCut,
                                                     int tle_cut = TleScheme::kDefaultCut) {
  return {{true, false, tle_cut, "TLE"},
          {false, false, dtle_cut, "DTLE-NoMED"},
          {false, true, dtle_cut, "DTLE"}};
}

struct ImageResult {
  std::string image;
  std::string scheme;
  int cut = 0;
  bool use_med = false;
  std::size_t ec_bits = 0;
  double er_bpp = 0.0;
  double psnr_original = std::nan("");
  double psnr_cover = std::nan("");
  std::size_t aux_bits = 0;
  std::size_t lclm_bits = 0;
  bool complex = false;
  double runtime_ms = 0.0;
  std::size_t capacity_bits = 0;
  bool embedded = false;  // false when even the overhead does not fit
};

/// Measures one (image, scheme) cell: seed-0 dry-run capacity, then a real
/// embed at that size. Embedded bits shift later prediction contexts, so
/// the dry-run figure can overshoot by a few bits; we back off by the
/// reported deficit until the embed fits.
inline ImageResult measure_image(const std::string& name, const GrayImage& img,
                                 const SchemeVariant& v, std::uint32_t seed = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  ImageResult row;
  row.image = name;
  row.scheme = v.name;
  row.cut = v.cut;
  row.use_med = v.use_med;

  const Options opt{v.cut, v.use_med};
  const CapacityReport cap = v.tle ? tle_capacity(img, opt, seed) : dtle_capacity(img, opt, seed);
  row.capacity_bits = cap.max_secret_bits;
  row.lclm_bits = cap.l_clm;
  row.aux_bits = cap.aux_bits;
  row.complex = is_complex<DtleScheme>(img, DtleScheme::kDefaultCut);

  std::size_t target = cap.max_secret_bits;
  if (cap.header_fits) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      const Bits secret = RandomBitSource(seed).take(target);
      try {
        const StegoResult res = v.tle ? tle_embed(img, secret, opt) : dtle_embed(img, secret, opt);
        row.ec_bits = res.ec;
        row.er_bpp = embedding_rate(res.ec, img.pixel_count());
        row.psnr_original = res.psnr_original;
        row.psnr_cover = res.psnr_cover;
        row.lclm_bits = res.l_clm;
        row.aux_bits = res.aux_bits;
        row.embedded = true;
        break;
      } catch (const InsufficientCapacityError& e) {
        const std::size_t deficit = e.needed() - e.available();
        if (deficit >= target) break;
        target -= deficit;
      }
    }
  }

  row.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

inline std::vector<ImageResult> bench_images(
    const std::vector<std::pair<std::string, GrayImage>>& images,
    const std::vector<SchemeVariant>& variants, std::uint32_t seed = 0) {
  std::vector<ImageResult> rows;
  rows.reserve(images.size() * variants.size());
  for (const auto& [name, img] : images)
    for (const auto& v : variants) rows.push_back(measure_image(name, img, v, seed));
  return rows;
}

namespace detail {

inline void put_db(std::ostream& os, double v) {
  if (std::isnan(v)) {
    os << "nan";
  } else if (std::isinf(v)) {
    os << "inf";
  } else {
    os << std::fixed << std::setprecision(4) << v;
  }
}

}  // namespace detail

inline void write_csv(std::ostream& os, const std::vector<ImageResult>& rows) {
  os << "image,scheme,n,use_med,ec_bits,er_bpp,psnr_original_db,psnr_cover_db,"
        "aux_bits,lclm_bits,complex,runtime_ms\n";
  for (const auto& r : rows) {
    os << r.image << ',' << r.scheme << ',' << r.cut << ',' << (r.use_med ? 1 : 0) << ','
       << r.ec_bits << ',' << std::fixed << std::setprecision(6) << r.er_bpp << ',';
    detail::put_db(os, r.psnr_original);
    os << ',';
    detail::put_db(os, r.psnr_cover);
    os << ',' << r.aux_bits << ',' << r.lclm_bits << ',' << (r.complex ? 1 : 0) << ','
       << std::fixed << std::setprecision(3) << r.runtime_ms << '\n';
  }
}

/// Success-percentage table over the measured capacities, one row per
/// (target, scheme). Appended after the per-image rows, separated by a
/// blank line.
inline void write_spe_table(std::ostream& os, const std::vector<ImageResult>& rows,
                            const std::vector<std::size_t>& targets) {
  std::vector<std::string> schemes;
  for (const auto& r : rows)
    if (std::find(schemes.begin(), schemes.end(), r.scheme) == schemes.end())
      schemes.push_back(r.scheme);
  os << "\ntarget_ec,scheme,spe_percent\n";
  for (const auto target : targets) {
    for (const auto& s : schemes) {
      std::vector<std::size_t> caps;
      for (const auto& r : rows)
        if (r.scheme == s) caps.push_back(r.capacity_bits);
      if (caps.empty()) continue;
      os << target << ',' << s << ',' << std::fixed << std::setprecision(2) << spe(caps, target)
         << '\n';
    }
  }
}

/// Default SPE target ladder, mirroring the usual 10^4-step sweeps.
inline std::vector<std::size_t> default_spe_targets() {
  std::vector<std::size_t> t;
  for (std::size_t ec = 50'000; ec <= 400'000; ec += 50'000) t.push_back(ec);
  return t;
}

}  // namespace dtle
