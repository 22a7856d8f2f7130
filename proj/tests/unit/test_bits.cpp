#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dtle/bits.hpp"

using dtle::BitCursor;
using dtle::Bits;

TEST_CASE("bits push and get") {
  Bits b;
  for (int bit : {1, 0, 1, 1, 0, 0, 0, 1, 1}) b.push_back(bit);
  REQUIRE(b.size() == 9);
  REQUIRE(b.get(0) == 1);
  REQUIRE(b.get(1) == 0);
  REQUIRE(b.get(8) == 1);
  REQUIRE(b.bytes().size() == 2);
  REQUIRE(b.bytes()[0] == 0xB1);  // 1011 0001
  REQUIRE(b.bytes()[1] == 0x80);
}

TEST_CASE("append_uint is big-endian and read_uint inverts it") {
  Bits b;
  b.append_uint(0xABCDu, 16);
  b.append_uint(5, 3);
  REQUIRE(b.size() == 19);
  REQUIRE(b.read_uint(0, 16) == 0xABCDu);
  REQUIRE(b.read_uint(16, 3) == 5);
  REQUIRE(b.bytes()[0] == 0xAB);
}

TEST_CASE("slice and append round-trip random streams") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    Bits b;
    const std::size_t len = rng() % 200;
    for (std::size_t i = 0; i < len; ++i) b.push_back(static_cast<int>(rng() & 1));
    const std::size_t cut = len == 0 ? 0 : rng() % len;
    Bits joined = b.slice(0, cut);
    joined.append(b.slice(cut, len - cut));
    REQUIRE(joined == b);
  }
}

TEST_CASE("from_bytes masks trailing bits so equality is structural") {
  const std::vector<std::uint8_t> raw{0xFF, 0xFF};
  Bits a = Bits::from_bytes(raw, 11);
  Bits b;
  for (int i = 0; i < 11; ++i) b.push_back(1);
  REQUIRE(a == b);
  REQUIRE(a.bytes()[1] == 0xE0);
}

TEST_CASE("cursor counts padding reads past the end") {
  Bits b;
  b.push_back(1);
  BitCursor cur(b);
  REQUIRE(cur.next() == 1);
  REQUIRE(cur.exhausted());
  REQUIRE(cur.next() == 0);
  REQUIRE(cur.next() == 0);
  REQUIRE(cur.padding() == 2);
}

TEST_CASE("random bit source is reproducible per seed") {
  dtle::RandomBitSource a(7), b(7), c(8);
  const Bits sa = a.take(100), sb = b.take(100), sc = c.take(100);
  REQUIRE(sa == sb);
  REQUIRE(sa != sc);
}
