#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace polar {

// Bit vectors are stored 0-based; public index parameters and file formats
// are 1-based (element i+1 of the math lives at v[i]).
using BitVector = std::vector<std::uint8_t>;

inline void require_bits(const BitVector& v, const char* what) {
  for (auto b : v)
    if (b > 1) throw std::invalid_argument(std::string(what) + ": entries must be 0 or 1");
}

inline bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace polar
