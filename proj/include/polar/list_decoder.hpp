#pragma once

#include <cstdint>
#include <span>

#include "polar/code.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

struct DecodeOutcome {
  BitVector u_hat;
  bool crc_ok = false;
  std::uint64_t visits = 0;
};

// CRC-aided successive-cancellation list decoder with lazy-copy (copy-on-write)
// per-level arrays. Path metric: add |L| whenever a path's decision opposes the
// sign of its decision LLR. The CRC-passing path with the smallest metric wins;
// if none passes, the smallest metric overall.
class ListDecoder {
 public:
  ListDecoder(const CodeConfig& cfg, int list_size, CheckNodeRule rule = CheckNodeRule::exact);

  DecodeOutcome decode(std::span<const double> channel_llrs);

  int list_size() const { return L_; }

 private:
  struct Slot {
    std::vector<double> llr;
    std::vector<std::uint8_t> c;  // two partial-sum columns, interleaved
  };

  void reset();
  int writable_slot(int level, int path);
  int clone_path(int path);
  void kill_path(int path);
  void calc_llr(int path, int level, int phase);
  void update_c(int path, int level, int phase);

  const CodeConfig* cfg_;
  int L_, n_, N_;
  CheckNodeRule rule_;

  std::vector<std::vector<Slot>> slots_;     // [level][slot]
  std::vector<std::vector<int>> refcnt_;     // [level][slot]
  std::vector<std::vector<int>> path_slot_;  // [level][path]
  std::vector<std::vector<int>> free_slots_; // per-level stack
  std::vector<std::uint8_t> active_;
  std::vector<double> metric_;
  std::vector<BitVector> u_;
  std::vector<int> free_paths_;
  std::uint64_t visits_ = 0;
};

DecodeOutcome ca_scl_decode(std::span<const double> channel_llrs, const CodeConfig& cfg,
                            int list_size);

}  // namespace polar
