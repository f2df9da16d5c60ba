#pragma once

#include <cstdint>
#include <random>

#include "polar/bits.hpp"

namespace polar {

// splitmix64 step; used to decorrelate nearby seed values before they reach
// the mt19937_64 engines so that seed, seed+1, ... give independent streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97f4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

inline BitVector random_bits(std::size_t len, std::uint64_t seed) {
  auto eng = make_engine(seed);
  BitVector out(len);
  std::uint64_t word = 0;
  int avail = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (avail == 0) {
      word = eng();
      avail = 64;
    }
    out[i] = static_cast<std::uint8_t>(word & 1u);
    word >>= 1;
    --avail;
  }
  return out;
}

}  // namespace polar
