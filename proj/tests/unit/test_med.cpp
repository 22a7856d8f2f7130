#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "dtle/med.hpp"
#include "dtle/synth.hpp"

using dtle::AuxInfo;
using dtle::GrayImage;
using dtle::med_forward;
using dtle::med_inverse;
using dtle::med_predict;

namespace {

// Scalar replay of the forward transform, written independently of the
// library path: per-pixel difference, global shift, clamp at 255.
struct ForwardReplay {
  std::vector<int> raw;  // pre-clamp shifted values
  int shift = 0;
};

ForwardReplay replay_forward(const GrayImage& img) {
  ForwardReplay out;
  out.raw.assign(img.pixel_count(), -1);
  int min_d = 0;
  std::vector<int> d(img.pixel_count(), 0);
  for (int r = 1; r < img.height; ++r) {
    for (int c = 1; c < img.width; ++c) {
      const int a = img.at(r, c - 1), b = img.at(r - 1, c), cc = img.at(r - 1, c - 1);
      int pred;
      if (cc <= std::min(a, b)) {
        pred = std::max(a, b);
      } else if (cc >= std::max(a, b)) {
        pred = std::min(a, b);
      } else {
        pred = a + b - cc;
      }
      d[static_cast<std::size_t>(r) * img.width + c] = img.at(r, c) - pred;
      min_d = std::min(min_d, img.at(r, c) - pred);
    }
  }
  out.shift = min_d < 0 ? -min_d : 0;
  for (int r = 1; r < img.height; ++r)
    for (int c = 1; c < img.width; ++c) {
      const std::size_t i = static_cast<std::size_t>(r) * img.width + c;
      out.raw[i] = d[i] + out.shift;
    }
  return out;
}

}  // namespace

TEST_CASE("med_predict selects the right branch") {
  REQUIRE(med_predict(5, 3, 2) == 5);  // c <= min -> max(a,b)
  REQUIRE(med_predict(5, 3, 6) == 3);  // c >= max -> min(a,b)
  REQUIRE(med_predict(5, 3, 4) == 4);  // otherwise a+b-c
}

TEST_CASE("constant image transforms to all-zero differences") {
  const GrayImage img = dtle::synth::constant(8, 8, 100);
  const auto [diff, aux] = med_forward(img);
  REQUIRE(aux.shift == 0);
  REQUIRE_FALSE(aux.overflow_flag);
  for (int c = 0; c < 8; ++c) REQUIRE(diff.at(0, c) == 100);
  for (int r = 0; r < 8; ++r) REQUIRE(diff.at(r, 0) == 100);
  for (int r = 1; r < 8; ++r)
    for (int c = 1; c < 8; ++c) REQUIRE(diff.at(r, c) == 0);
}

TEST_CASE("hand-traced 2x2 example") {
  GrayImage img(2, 2);
  img.at(0, 0) = 10;
  img.at(0, 1) = 20;
  img.at(1, 0) = 30;
  img.at(1, 1) = 25;
  // prediction at (1,1): a=30, b=20, c=10 -> max = 30; D = -5 -> shift 5
  const auto [diff, aux] = med_forward(img);
  REQUIRE(aux.shift == 5);
  REQUIRE(diff.at(1, 1) == 0);
  REQUIRE(diff.at(0, 1) == 20);
  REQUIRE(med_inverse(diff, aux) == img);
}

TEST_CASE("checkerboard saturates and records overflow cells") {
  GrayImage img(16, 16);
  for (int r = 0; r < 16; ++r)
    for (int c = 0; c < 16; ++c) img.at(r, c) = ((r + c) % 2) ? 255 : 0;
  const auto [diff, aux] = med_forward(img);
  REQUIRE(aux.overflow_flag);
  REQUIRE(aux.overflow_flag == !aux.records.empty());

  // replay forward independently and re-check every cell
  const ForwardReplay replay = replay_forward(img);
  REQUIRE(replay.shift == aux.shift);
  for (int r = 1; r < 16; ++r)
    for (int c = 1; c < 16; ++c) {
      const int raw = replay.raw[static_cast<std::size_t>(r) * 16 + c];
      REQUIRE(diff.at(r, c) == std::min(raw, 255));
    }
  for (const auto& rec : aux.records) {
    const int raw = replay.raw[static_cast<std::size_t>(rec.row - 1) * 16 + (rec.col - 1)];
    REQUIRE(raw >= 255);
    REQUIRE(rec.excess == raw - 255);
  }
  REQUIRE(med_inverse(diff, aux) == img);
}

TEST_CASE("inverse of forward is the identity on adversarial covers") {
  std::mt19937 rng(5);
  std::vector<GrayImage> covers{
      dtle::synth::constant(8, 8, 0),     dtle::synth::constant(8, 8, 255),
      dtle::synth::horizontal_gradient(32, 32), dtle::synth::vertical_gradient(32, 32),
      dtle::synth::salt_pepper(1, 32, 32, 20)};
  for (int i = 0; i < 60; ++i) covers.push_back(dtle::synth::uniform_noise(rng(), 2 + rng() % 31, 2 + rng() % 31));
  for (int i = 0; i < 60; ++i) covers.push_back(dtle::synth::smooth_random(rng(), 3 + rng() % 30, 3 + rng() % 30));
  for (const auto& img : covers) {
    const auto [diff, aux] = med_forward(img);
    REQUIRE(static_cast<int>(aux.shift) <= 255);
    REQUIRE(med_inverse(diff, aux) == img);
  }
}

TEST_CASE("aux info survives its wire format") {
  AuxInfo aux;
  aux.shift = 77;
  aux.overflow_flag = true;
  aux.records = {{2, 3, 0}, {10, 17, 255}};
  const dtle::Bits bits = aux.to_bits();
  REQUIRE(bits.size() == aux.bit_size());
  REQUIRE(AuxInfo::parse(bits, 2, 32, 32) == aux);
  REQUIRE_THROWS_AS(AuxInfo::parse(bits, 1, 32, 32), dtle::CorruptionError);

  AuxInfo bad = aux;
  bad.records[0].row = 1;  // border cell cannot overflow
  REQUIRE_THROWS_AS(AuxInfo::parse(bad.to_bits(), 2, 32, 32), dtle::CorruptionError);
}

TEST_CASE("inverse flags values pushed outside the pixel range") {
  const GrayImage img = dtle::synth::constant(4, 4, 200);
  auto [diff, aux] = med_forward(img);
  diff.at(2, 2) = 255;  // tampered difference cell
  REQUIRE_THROWS_AS(med_inverse(diff, aux), dtle::CorruptionError);
}

TEST_CASE("difference histogram concentrates versus the saturating original") {
  // smooth scene with big saturated plateaus: MED must shrink the marked set
  dtle::synth::SceneParams params{10, 40, 220, 3, {{60.0, 80.0, 45.0, 10.0, 253.0}, {30.0, 30.0, 20.0, 8.0, 2.0}}};
  const GrayImage img = dtle::synth::scene(42, 128, 128, params);
  const auto [diff, aux] = med_forward(img);

  const auto marked = [](const GrayImage& im) {
    std::size_t n = 0;
    for (int r = 1; r + 1 < im.height; ++r)
      for (int c = 1; c + 1 < im.width; ++c) {
        const int h = im.at(r, c) >> 2;
        n += (h <= 1 || h >= 62);
      }
    return n;
  };
  const std::size_t before = marked(img);
  const std::size_t after = marked(diff);
  REQUIRE(before > after);

  std::size_t near_shift = 0;
  for (int r = 1; r < diff.height; ++r)
    for (int c = 1; c < diff.width; ++c)
      near_shift += (std::abs(static_cast<int>(diff.at(r, c)) - static_cast<int>(aux.shift)) <= 2);
  REQUIRE(near_shift > before);
}
