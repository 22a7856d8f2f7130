// Writes the deterministic benchmark scenes as PGM files, by default the
// eight-image standard suite at 512x512.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dtle/pgm.hpp"
#include "dtle/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic benchmark image suite"};
  std::string out_dir = "testdata";
  int size = 512;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--size", size, "square image size")->check(CLI::Range(16, 4096));
  CLI11_PARSE(app, argc, argv);

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "cannot create " << out_dir << ": " << ec.message() << "\n";
    return 1;
  }
  for (const auto& [name, img] : dtle::synth::standard_suite(size)) {
    const std::string path = out_dir + "/" + name + ".pgm";
    dtle::save_pgm(path, img);
    std::cout << path << "\n";
  }
  return 0;
}
