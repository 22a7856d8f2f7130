// Command-line front end: embed/extract/capacity plus the bench and compare
// harnesses. Machine-readable JSON goes to stdout, CSV to --csv (or stdout
// for bench/compare), diagnostics to stderr.
//
// Exit codes: 0 success, 1 usage/parse errors, 2 insufficient capacity,
// 3 corrupted or non-stego input.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dtle/dtle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliConfig {
  std::string command;
  std::string in_path;
  std::string out_path;
  std::string secret_path;
  std::optional<std::uint64_t> secret_random;
  std::optional<std::uint64_t> secret_bits;
  std::uint32_t seed = 0;
  int cut = -1;  // -1: per-scheme default
  std::string med = "off";
  std::string scheme = "dtle";
  std::string csv_path;
};

double json_db(double v) { return v; }

json db_field(double v) {
  if (std::isinf(v)) return "inf";
  if (std::isnan(v)) return "nan";
  return json_db(v);
}

int resolved_cut(const CliConfig& cfg) {
  if (cfg.cut >= 0) return cfg.cut;
  return cfg.scheme == "tle" ? dtle::TleScheme::kDefaultCut : dtle::DtleScheme::kDefaultCut;
}

bool resolve_med(const CliConfig& cfg, const dtle::GrayImage& img, int cut) {
  if (cfg.med == "on") return true;
  if (cfg.med == "off") return false;
  return dtle::is_complex<dtle::DtleScheme>(img, std::min(cut, dtle::DtleScheme::kMaxCut));
}

dtle::Bits load_secret(const CliConfig& cfg) {
  if (cfg.secret_random) return dtle::RandomBitSource(cfg.seed).take(*cfg.secret_random);
  if (cfg.secret_path.empty()) return {};
  std::ifstream in(cfg.secret_path, std::ios::binary);
  if (!in) throw dtle::ParseError("cannot open secret file " + cfg.secret_path, 0);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  const std::uint64_t bits = cfg.secret_bits.value_or(bytes.size() * 8ull);
  if (bits > bytes.size() * 8ull)
    throw dtle::ParameterError("--secret-bits exceeds the secret file size");
  return dtle::Bits::from_bytes(bytes, bits);
}

void write_secret_file(const std::string& path, const dtle::Bits& bits) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dtle::ParseError("cannot open " + path + " for writing", 0);
  const auto& bytes = bits.bytes();
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw dtle::ParseError("short write to " + path, 0);
}

int run_embed(const CliConfig& cfg) {
  const dtle::GrayImage cover = dtle::load_pgm(cfg.in_path);
  const int cut = resolved_cut(cfg);
  const bool use_med = resolve_med(cfg, cover, cut);
  const dtle::Bits secret = load_secret(cfg);
  const dtle::Options opt{cut, use_med};

  const dtle::StegoResult res = cfg.scheme == "tle" ? dtle::tle_embed(cover, secret, opt)
                                                    : dtle::dtle_embed(cover, secret, opt);
  dtle::save_pgm(cfg.out_path, res.stego);

  json summary{{"command", "embed"},
               {"input", cfg.in_path},
               {"output", cfg.out_path},
               {"scheme", cfg.scheme},
               {"n", cut},
               {"med", use_med ? "on" : "off"},
               {"ec", res.ec},
               {"slots_used", res.slots_used},
               {"k_end", res.k_end},
               {"l_clm", res.l_clm},
               {"n_over", res.n_over},
               {"psnr_original", db_field(res.psnr_original)},
               {"psnr_cover", db_field(res.psnr_cover)},
               {"seed", cfg.seed}};
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int run_extract(const CliConfig& cfg) {
  if (cfg.med == "auto")
    throw dtle::ParameterError("--med auto is only valid for embed/capacity");
  const dtle::GrayImage stego = dtle::load_pgm(cfg.in_path);
  const int cut = resolved_cut(cfg);
  const dtle::Options opt{cut, cfg.med == "on"};

  const dtle::ExtractResult res = cfg.scheme == "tle" ? dtle::tle_extract(stego, opt)
                                                      : dtle::dtle_extract(stego, opt);
  if (!cfg.out_path.empty()) dtle::save_pgm(cfg.out_path, res.original);
  if (!cfg.secret_path.empty()) write_secret_file(cfg.secret_path, res.secret);

  json summary{{"command", "extract"},
               {"input", cfg.in_path},
               {"scheme", cfg.scheme},
               {"n", cut},
               {"med", cfg.med},
               {"secret_bits", res.secret.size()},
               {"image_out", cfg.out_path},
               {"secret_out", cfg.secret_path}};
  std::cout << summary.dump(2) << "\n";
  return 0;
}

int run_capacity(const CliConfig& cfg) {
  const dtle::GrayImage cover = dtle::load_pgm(cfg.in_path);
  const int cut = resolved_cut(cfg);
  const bool use_med = resolve_med(cfg, cover, cut);
  const dtle::Options opt{cut, use_med};
  const dtle::CapacityReport rep = cfg.scheme == "tle" ? dtle::tle_capacity(cover, opt, cfg.seed)
                                                       : dtle::dtle_capacity(cover, opt, cfg.seed);
  const bool complex = dtle::is_complex<dtle::DtleScheme>(
      cover, std::min(cut, dtle::DtleScheme::kMaxCut));

  json summary{{"command", "capacity"},
               {"input", cfg.in_path},
               {"scheme", cfg.scheme},
               {"n", cut},
               {"med", use_med ? "on" : "off"},
               {"max_secret_bits", rep.max_secret_bits},
               {"overhead_bits", rep.overhead_bits},
               {"slot_count", rep.slot_count},
               {"l_clm", rep.l_clm},
               {"aux_bits", rep.aux_bits},
               {"header_fits", rep.header_fits},
               {"complex", complex},
               {"seed", cfg.seed}};
  std::cout << summary.dump(2) << "\n";
  return 0;
}

std::vector<dtle::SchemeVariant> selected_variants(const CliConfig& cfg, bool scheme_given) {
  if (!scheme_given) return dtle::canonical_variants();
  dtle::SchemeVariant v;
  v.tle = cfg.scheme == "tle";
  v.use_med = cfg.med == "on";
  v.cut = resolved_cut(cfg);
  v.name = v.tle ? (v.use_med ? "TLE-MED" : "TLE") : (v.use_med ? "DTLE" : "DTLE-NoMED");
  return {v};
}

int run_bench(const CliConfig& cfg, bool scheme_given, bool single_file) {
  std::vector<std::pair<std::string, dtle::GrayImage>> images;
  std::size_t failed = 0;
  if (single_file) {
    images.emplace_back(fs::path(cfg.in_path).stem().string(), dtle::load_pgm(cfg.in_path));
  } else {
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(cfg.in_path))
      if (entry.is_regular_file() && entry.path().extension() == ".pgm")
        paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    for (const auto& p : paths) {
      try {
        images.emplace_back(p.stem().string(), dtle::load_pgm(p.string()));
      } catch (const dtle::Error& e) {
        std::cerr << "skip " << p.string() << ": " << e.what() << "\n";
        ++failed;
      }
    }
    if (images.empty()) std::cerr << "warning: no readable PGM images in " << cfg.in_path << "\n";
  }

  const auto variants = selected_variants(cfg, scheme_given);
  const auto rows = dtle::bench_images(images, variants, cfg.seed);

  std::ofstream csv_file;
  std::ostream* os = &std::cout;
  if (!cfg.csv_path.empty()) {
    csv_file.open(cfg.csv_path);
    if (!csv_file) throw dtle::ParseError("cannot open " + cfg.csv_path + " for writing", 0);
    os = &csv_file;
  }
  dtle::write_csv(*os, rows);
  dtle::write_spe_table(*os, rows, dtle::default_spe_targets());

  std::cerr << "processed " << images.size() << " image(s), skipped " << failed << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible data hiding on the high-significant-bit plane"};
  app.require_subcommand(1);

  CliConfig cfg;
  const std::vector<std::string> med_values{"on", "off", "auto"};
  const std::vector<std::string> scheme_values{"dtle", "tle"};

  auto add_common = [&](CLI::App* sub, bool needs_out) {
    sub->add_option("--in", cfg.in_path, "input path")->required();
    if (needs_out) sub->add_option("--out", cfg.out_path, "output image path");
    sub->add_option("--n", cfg.cut, "bit-plane cut (default: 2 dtle, 3 tle)")
        ->check(CLI::Range(0, 7));
    sub->add_option("--med", cfg.med, "MED pre-processing: on, off or auto")
        ->check(CLI::IsMember(med_values));
    sub->add_option("--scheme", cfg.scheme, "embedding scheme")
        ->check(CLI::IsMember(scheme_values));
    sub->add_option("--seed", cfg.seed, "seed for random secrets / dry runs");
  };

  auto* embed = app.add_subcommand("embed", "embed a secret bitstream into a PGM cover");
  add_common(embed, true);
  embed->get_option("--out")->required();
  auto* opt_secret = embed->add_option("--secret", cfg.secret_path, "secret bits from file");
  auto* opt_random =
      embed->add_option("--secret-random", cfg.secret_random, "generate N random secret bits");
  embed->add_option("--secret-bits", cfg.secret_bits, "bit length of --secret file");
  opt_secret->excludes(opt_random);

  auto* extract = app.add_subcommand("extract", "recover the secret and the original image");
  add_common(extract, true);
  extract->add_option("--secret", cfg.secret_path, "write recovered secret bits here");

  auto* capacity = app.add_subcommand("capacity", "report embeddable bits for a cover");
  add_common(capacity, false);

  auto* bench = app.add_subcommand("bench", "measure a directory of PGM images");
  add_common(bench, false);
  bench->add_option("--csv", cfg.csv_path, "CSV output path (default stdout)");

  auto* compare = app.add_subcommand("compare", "scheme comparison on a single image");
  add_common(compare, false);
  compare->add_option("--csv", cfg.csv_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (embed->parsed()) return run_embed(cfg);
    if (extract->parsed()) return run_extract(cfg);
    if (capacity->parsed()) return run_capacity(cfg);
    if (bench->parsed()) return run_bench(cfg, bench->count("--scheme") > 0, false);
    if (compare->parsed()) return run_bench(cfg, compare->count("--scheme") > 0, true);
  } catch (const dtle::InsufficientCapacityError& e) {
    std::cerr << json{{"error", e.what()},
                      {"type", "insufficient_capacity"},
                      {"needed", e.needed()},
                      {"available", e.available()}}
                     .dump()
              << "\n";
    return 2;
  } catch (const dtle::CorruptionError& e) {
    std::cerr << json{{"error", e.what()}, {"type", "corruption"}}.dump() << "\n";
    return 3;
  } catch (const dtle::Error& e) {
    std::cerr << json{{"error", e.what()}, {"type", "usage"}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}, {"type", "internal"}}.dump() << "\n";
    return 1;
  }
  return 1;
}
