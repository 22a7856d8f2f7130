#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "dtle/pgm.hpp"
#include "dtle/synth.hpp"

using dtle::GrayImage;

namespace {
std::vector<std::uint8_t> pgm_bytes(const std::string& header, const std::vector<int>& pixels) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (int p : pixels) out.push_back(static_cast<std::uint8_t>(p));
  return out;
}
}  // namespace

TEST_CASE("parses a minimal P5 file") {
  const auto img = dtle::read_pgm(pgm_bytes("P5\n2 2\n255\n", {0, 255, 7, 9}));
  REQUIRE(img.height == 2);
  REQUIRE(img.width == 2);
  REQUIRE(img.pixels == std::vector<std::uint8_t>{0, 255, 7, 9});
}

TEST_CASE("parses a 1x1 file and skips comments") {
  const auto img = dtle::read_pgm(pgm_bytes("P5\n# cam 3\n1 1\n# x\n255\n", {128}));
  REQUIRE(img.height == 1);
  REQUIRE(img.width == 1);
  REQUIRE(img.pixels[0] == 128);
}

TEST_CASE("rejects wrong maxval, magic and truncation") {
  REQUIRE_THROWS_AS(dtle::read_pgm(pgm_bytes("P5\n2 2\n65535\n", {0, 0, 0, 0})), dtle::ParseError);
  REQUIRE_THROWS_AS(dtle::read_pgm(pgm_bytes("P6\n2 2\n255\n", {0, 0, 0, 0})), dtle::ParseError);
  REQUIRE_THROWS_AS(dtle::read_pgm(pgm_bytes("P5\n2 2\n255\n", {0, 0, 0})), dtle::ParseError);
  try {
    dtle::read_pgm(pgm_bytes("P5\n2 2\n65535\n", {0, 0, 0, 0}));
    FAIL("expected ParseError");
  } catch (const dtle::ParseError& e) {
    REQUIRE(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("writes the canonical width-then-height header") {
  GrayImage img(2, 3, 0);  // 2 rows, 3 columns
  const auto data = dtle::write_pgm(img);
  const std::string head(data.begin(), data.begin() + 11);
  REQUIRE(head == "P5\n3 2\n255\n");

  GrayImage one(1, 1, 128);
  const auto d1 = dtle::write_pgm(one);
  REQUIRE(std::string(d1.begin(), d1.end() - 1) == "P5\n1 1\n255\n");
  REQUIRE(d1.back() == 128);
}

TEST_CASE("read of write is the identity on random images") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 20; ++iter) {
    GrayImage img = dtle::synth::uniform_noise(rng(), 16, 16);
    REQUIRE(dtle::read_pgm(dtle::write_pgm(img)) == img);
  }
}
