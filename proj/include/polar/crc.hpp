#pragma once

#include "polar/bits.hpp"

namespace polar {

// Generator polynomial given by the exponents with nonzero coefficients.
// The default is g(x) = x^24 + x^23 + x^6 + x^5 + x + 1.
struct CrcSpec {
  int degree = 0;
  std::vector<int> taps;  // must contain both `degree` and 0 when degree > 0

  bool enabled() const { return degree > 0; }
  void validate() const;

  static CrcSpec crc24() { return CrcSpec{24, {24, 23, 6, 5, 1, 0}}; }
  static CrcSpec none() { return CrcSpec{}; }
};

// Appends `degree` parity bits: parity = remainder of payload(x) * x^degree mod g(x),
// MSB-first, zero initial register, no final xor.
BitVector crc_attach(const BitVector& payload, const CrcSpec& crc);

// True iff the whole frame (payload + parity) is divisible by g(x).
bool crc_check(const BitVector& frame, const CrcSpec& crc);

}  // namespace polar
