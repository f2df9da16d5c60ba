#pragma once

#include <cstdint>
#include <vector>

#include "polar/bits.hpp"

namespace polar {

struct ChannelParams {
  double ebn0_db = 0.0;
  double rate = 0.0;   // rate used in the Eb/N0 -> sigma conversion (K/N)
  double sigma = 0.0;  // noise std dev per real dimension

  static ChannelParams from_ebn0(double ebn0_db, double rate);
};

// BPSK: bit 0 -> +1, bit 1 -> -1.
std::vector<double> modulate(const BitVector& codeword);

// y = x + n, n iid N(0, sigma^2); the seed fully determines the noise.
std::vector<double> transmit(const std::vector<double>& x, const ChannelParams& params,
                             std::uint64_t seed);

// Channel LLRs log P(y|0)/P(y|1) = 2y/sigma^2.
std::vector<double> channel_llrs(const std::vector<double>& y, const ChannelParams& params);

}  // namespace polar
