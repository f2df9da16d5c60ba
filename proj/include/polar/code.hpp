#pragma once

#include "polar/bits.hpp"
#include "polar/crc.hpp"
#include "polar/gauss.hpp"

namespace polar {

struct CodeConfig {
  int n = 0;                // block length exponent
  int block_length = 0;     // N = 2^n
  int info_count = 0;       // K, number of unfrozen positions (CRC bits included)
  double design_snr_db = 0.0;
  std::vector<int> info_set;       // 1-based unfrozen indices, ascending
  BitVector frozen_mask;           // frozen_mask[i] == 1 exactly when i+1 is frozen
  std::vector<double> mu_profile;  // GA means at the design SNR, u-domain order
  CrcSpec crc;

  bool is_frozen(int index1) const { return frozen_mask[static_cast<std::size_t>(index1) - 1] != 0; }
  int message_length() const { return info_count - (crc.enabled() ? crc.degree : 0); }
  void validate() const;
};

// GA code construction: pick the K split channels with the largest mean LLR
// (ties broken toward the lower index) at the given design SNR, rate K/N.
CodeConfig construct_code(int n, int K, double design_snr_db, const CrcSpec& crc);

// Build a config from an explicit unfrozen set (used for fixed masks and file
// round-trips); the GA profile is still computed at design_snr_db with rate K/N.
CodeConfig make_code_config(int n, std::vector<int> info_set, double design_snr_db,
                            const CrcSpec& crc);

// 1-based image of each index under bit reversal: perm[i] is where index i+1 maps.
std::vector<int> bit_reversal_perm(int n);

// c = u * B_N * G2^{tensor n}; u must be all-zero on frozen positions.
BitVector encode(const CodeConfig& cfg, const BitVector& u);

// Scatter a K-bit frame into the unfrozen positions (ascending), zeros elsewhere.
BitVector place_frame(const CodeConfig& cfg, const BitVector& frame);

// Gather the K unfrozen positions of a length-N word, ascending.
BitVector extract_frame(const CodeConfig& cfg, const BitVector& u);

// message -> u: append CRC parity when enabled, then place into unfrozen slots.
BitVector u_from_message(const CodeConfig& cfg, const BitVector& message);

}  // namespace polar
