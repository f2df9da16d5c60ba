#include <doctest.h>

#include "oracles.hpp"
#include "polar/crc.hpp"
#include "polar/rng.hpp"

using polar::BitVector;
using polar::CrcSpec;

namespace {
const CrcSpec kCrc4{4, {4, 1, 0}};
const CrcSpec kCrc3{3, {3, 1, 0}};
}  // namespace

TEST_CASE("crc attach worked examples") {
  // g(x) = x + 1: parity of a single bit is the bit itself.
  CrcSpec parity{1, {1, 0}};
  CHECK(polar::crc_attach({1}, parity) == BitVector{1, 1});
  CHECK(polar::crc_attach({0}, parity) == BitVector{0, 0});
  CHECK(polar::crc_attach({1, 0, 1}, parity) == BitVector{1, 0, 1, 0});

  // Long division of 1011.000 by x^3 + x + 1 cancels exactly; 1101.000 leaves 001.
  CHECK(polar::crc_attach({1, 0, 1, 1}, kCrc3) == BitVector{1, 0, 1, 1, 0, 0, 0});
  CHECK(polar::crc_attach({1, 1, 0, 1}, kCrc3) == BitVector{1, 1, 0, 1, 0, 0, 1});
}

TEST_CASE("crc attach matches the polynomial-division oracle") {
  for (const CrcSpec& spec : {CrcSpec::crc24(), kCrc4, kCrc3}) {
    for (std::size_t len : {std::size_t{1}, std::size_t{8}, std::size_t{37}, std::size_t{488}}) {
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        BitVector payload = polar::random_bits(len, 1000 * len + seed);
        BitVector frame = polar::crc_attach(payload, spec);
        REQUIRE(frame.size() == len + static_cast<std::size_t>(spec.degree));
        CHECK(BitVector(frame.begin(), frame.begin() + static_cast<std::ptrdiff_t>(len)) ==
              payload);
        BitVector rem = oracle::crc_remainder(payload, spec.degree, spec.taps);
        CHECK(BitVector(frame.begin() + static_cast<std::ptrdiff_t>(len), frame.end()) == rem);
      }
    }
  }
}

TEST_CASE("crc attach/check round trip") {
  for (const CrcSpec& spec : {CrcSpec::crc24(), kCrc4}) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      BitVector payload = polar::random_bits(40, 7000 + seed);
      CHECK(polar::crc_check(polar::crc_attach(payload, spec), spec));
    }
  }
}

TEST_CASE("crc detects every single-bit error") {
  // g(x) has more than one term, so no x^i is divisible by it.
  int cases = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    BitVector frame = polar::crc_attach(polar::random_bits(76, 40 + seed), CrcSpec::crc24());
    for (std::size_t pos = 0; pos < frame.size(); ++pos) {
      BitVector bad = frame;
      bad[pos] ^= 1;
      CHECK_FALSE(polar::crc_check(bad, CrcSpec::crc24()));
      ++cases;
    }
  }
  CHECK(cases == 1000);
}

TEST_CASE("crc check rejects random frames at roughly the design rate") {
  // A uniformly random frame passes a degree-24 check with probability 2^-24.
  int passes = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed)
    if (polar::crc_check(polar::random_bits(64, 90000 + seed), CrcSpec::crc24())) ++passes;
  CHECK(passes == 0);

  // Degree 4: expect about 1/16 of random frames to pass.
  passes = 0;
  for (std::uint64_t seed = 0; seed < 4000; ++seed)
    if (polar::crc_check(polar::random_bits(32, 50000 + seed), kCrc4)) ++passes;
  CHECK(passes > 120);
  CHECK(passes < 400);
}

TEST_CASE("crc spec validation") {
  CHECK_NOTHROW(CrcSpec::crc24().validate());
  CHECK_NOTHROW(CrcSpec::none().validate());
  CHECK_THROWS_AS((CrcSpec{4, {4, 1}}.validate()), std::invalid_argument);     // no x^0
  CHECK_THROWS_AS((CrcSpec{4, {1, 0}}.validate()), std::invalid_argument);     // no x^degree
  CHECK_THROWS_AS((CrcSpec{4, {4, 1, 1, 0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CrcSpec{4, {5, 4, 0}}.validate()), std::invalid_argument);  // tap > degree
  CHECK_THROWS_AS((CrcSpec{4, {4, -1, 0}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((CrcSpec{0, {0}}.validate()), std::invalid_argument);
}

TEST_CASE("crc argument validation") {
  CHECK_THROWS_AS(polar::crc_attach({}, kCrc4), std::invalid_argument);
  CHECK_THROWS_AS(polar::crc_attach({0, 2}, kCrc4), std::invalid_argument);
  CHECK_THROWS_AS(polar::crc_check({1, 0, 1, 1}, kCrc4), std::invalid_argument);  // too short
  // Disabled spec: attach is the identity, check always passes.
  CHECK(polar::crc_attach({1, 0}, CrcSpec::none()) == BitVector{1, 0});
  CHECK(polar::crc_check({1}, CrcSpec::none()));
}
