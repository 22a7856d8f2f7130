#include <catch2/catch_amalgamated.hpp>

#include "dtle/bitplane.hpp"
#include "dtle/synth.hpp"

using dtle::decompose;
using dtle::GrayImage;
using dtle::PlanePair;
using dtle::recompose;

TEST_CASE("decompose splits 215 at n=2 into (53, 3)") {
  GrayImage img(1, 1, 215);
  const PlanePair p = decompose(img, 2);
  REQUIRE(p.hsb[0] == 53);
  REQUIRE(p.lsb[0] == 3);
}

TEST_CASE("decompose edge values") {
  GrayImage zero(1, 1, 0), full(1, 1, 255);
  for (int n = 0; n <= 7; ++n) {
    const PlanePair pz = decompose(zero, n);
    REQUIRE(pz.hsb[0] == 0);
    REQUIRE(pz.lsb[0] == 0);
  }
  const PlanePair pf = decompose(full, 2);
  REQUIRE(pf.hsb[0] == 63);
  REQUIRE(pf.lsb[0] == 3);
}

TEST_CASE("recompose inverts the worked splits") {
  PlanePair p;
  p.height = 1;
  p.width = 1;
  p.cut = 2;
  p.hsb = {53};
  p.lsb = {3};
  REQUIRE(recompose(p).pixels[0] == 215);
  p.hsb = {42};
  REQUIRE(recompose(p).pixels[0] == 171);
  p.hsb = {0};
  p.lsb = {0};
  REQUIRE(recompose(p).pixels[0] == 0);
}

TEST_CASE("recompose of decompose is the identity for every value and cut") {
  GrayImage img(16, 16);
  for (int i = 0; i < 256; ++i) img.pixels[i] = static_cast<std::uint8_t>(i);
  for (int n = 0; n <= 7; ++n) REQUIRE(recompose(decompose(img, n)) == img);
}

TEST_CASE("hsb is monotone in the pixel value for a fixed cut") {
  for (int n = 0; n <= 7; ++n) {
    int prev = -1;
    for (int v = 0; v < 256; ++v) {
      GrayImage img(1, 1, static_cast<std::uint8_t>(v));
      const int h = decompose(img, n).hsb[0];
      REQUIRE(h >= prev);
      prev = h;
    }
  }
}

TEST_CASE("parameter and range validation") {
  GrayImage img(2, 2, 10);
  REQUIRE_THROWS_AS(decompose(img, -1), dtle::ParameterError);
  REQUIRE_THROWS_AS(decompose(img, 8), dtle::ParameterError);
  PlanePair bad = decompose(img, 2);
  bad.hsb[0] = 200;  // > 63
  REQUIRE_THROWS_AS(recompose(bad), dtle::RangeError);
}
