#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "polar/critical_set.hpp"
#include "polar/sc_decoder.hpp"

namespace polar {

// Thresholds for the two search-pruning rules. gamma_right = +infinity (the
// default) disables the not-select rule; an absent/empty omega entry disables
// the no-child rule at that level.
struct PruneParams {
  double gamma_left = 0.0;
  double gamma_right = std::numeric_limits<double>::infinity();
  std::vector<std::optional<double>> omega;  // omega[l] for search level l

  std::optional<double> omega_at(int level) const {
    if (level < 0 || static_cast<std::size_t>(level) >= omega.size()) return std::nullopt;
    return omega[static_cast<std::size_t>(level)];
  }

  static PruneParams disabled() { return PruneParams{}; }
  // Operating-point defaults (nearest tabulated Eb/N0 in [1.5, 2.5] dB).
  static PruneParams table_defaults(double ebn0_db);
};

struct ProgressiveResult {
  BitVector u_hat;
  bool crc_ok = false;
  std::uint64_t nodes_explored = 0;  // SC passes spent, root included
  std::uint64_t total_visits = 0;    // cumulative f/g evaluations
  std::optional<FlipSet> winning_flips;
};

// Candidates sorted by |decision LLR| / GA mean ascending, ties toward the
// lower index: small ratio = most suspicious first.
std::vector<int> flip_order(const CriticalSet& candidates, const ScTrace& trace,
                            const GaProfile& profile);

// Candidate-skip rule: an LLR magnitude far above its GA mean is trusted.
bool e_not_select(double llr_mag, double mu, const PruneParams& params);

// Subtree-abandon rule: among unfrozen positions after `after` that are not in
// `exclude`, if a fraction >= omega[level] have |LLR| below mu - gamma_left *
// sqrt(2 mu), the prefix itself is suspect and the node spawns no children.
bool e_no_child(const ScTrace& trace, int after, const CodeConfig& cfg,
                const GaProfile& profile, const PruneParams& params, int level,
                const CriticalSet& exclude);

// Progressive multi-level bit-flip SC decoder: level l explores flip sets of
// size l, children drawn from the modified critical set past the last flip.
class ProgressiveDecoder {
 public:
  ProgressiveDecoder(const CodeConfig& cfg, GaProfile profile, PruneParams params,
                     int max_level, std::uint64_t node_budget = 0);

  ProgressiveResult decode(std::span<const double> channel_llrs);

  // Test hook: called once per explored node with (level, flips).
  void set_explore_observer(std::function<void(int, const FlipSet&)> cb) {
    observer_ = std::move(cb);
  }

 private:
  const CodeConfig* cfg_;
  GaProfile profile_;
  PruneParams params_;
  int max_level_;
  std::uint64_t budget_;  // 0 = default 4 * |S| * max_level decodes
  ScDecoder engine_;
  CriticalSetCache csets_;
  std::function<void(int, const FlipSet&)> observer_;
};

ProgressiveResult progressive_decode(std::span<const double> channel_llrs,
                                     const CodeConfig& cfg, const GaProfile& profile,
                                     int max_level, const PruneParams& params);

}  // namespace polar
