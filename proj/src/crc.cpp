#include "polar/crc.hpp"

#include <algorithm>

namespace polar {

void CrcSpec::validate() const {
  if (degree == 0) {
    if (!taps.empty()) throw std::invalid_argument("crc: degree 0 admits no taps");
    return;
  }
  if (degree < 1) throw std::invalid_argument("crc: degree must be >= 0");
  bool has_top = false, has_zero = false;
  for (int t : taps) {
    if (t < 0 || t > degree) throw std::invalid_argument("crc: tap exponent out of range");
    if (t == degree) has_top = true;
    if (t == 0) has_zero = true;
  }
  if (!has_top || !has_zero)
    throw std::invalid_argument("crc: taps must include 0 and the degree");
  std::vector<int> sorted = taps;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("crc: duplicate tap");
}

namespace {

// XOR the generator into buf at every set leading bit: long division MSB-first.
// Positions i..i+degree of buf hold the working remainder window.
void divide(BitVector& buf, const CrcSpec& crc, std::size_t lead_count) {
  std::vector<int> offsets;
  offsets.reserve(crc.taps.size());
  for (int t : crc.taps) offsets.push_back(crc.degree - t);
  for (std::size_t i = 0; i < lead_count; ++i) {
    if (!buf[i]) continue;
    for (int off : offsets) buf[i + static_cast<std::size_t>(off)] ^= 1;
  }
}

}  // namespace

BitVector crc_attach(const BitVector& payload, const CrcSpec& crc) {
  crc.validate();
  require_bits(payload, "crc_attach");
  if (payload.empty()) throw std::invalid_argument("crc_attach: empty payload");
  if (!crc.enabled()) return payload;
  BitVector buf = payload;
  buf.resize(payload.size() + static_cast<std::size_t>(crc.degree), 0);
  divide(buf, crc, payload.size());
  BitVector out = payload;
  out.insert(out.end(), buf.begin() + static_cast<std::ptrdiff_t>(payload.size()), buf.end());
  return out;
}

bool crc_check(const BitVector& frame, const CrcSpec& crc) {
  crc.validate();
  require_bits(frame, "crc_check");
  if (!crc.enabled()) return true;
  if (frame.size() < static_cast<std::size_t>(crc.degree) + 1)
    throw std::invalid_argument("crc_check: frame shorter than degree + 1 bits");
  BitVector buf = frame;
  divide(buf, crc, frame.size() - static_cast<std::size_t>(crc.degree));
  return std::all_of(buf.end() - crc.degree, buf.end(), [](std::uint8_t b) { return b == 0; });
}

}  // namespace polar
