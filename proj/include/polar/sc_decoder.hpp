#pragma once

#include <cstdint>
#include <span>

#include "polar/bits.hpp"
#include "polar/code.hpp"

namespace polar {

// Decision-flip positions: 1-based unfrozen indices, strictly increasing.
struct FlipSet {
  std::vector<int> positions;

  bool contains(int index1) const;
  bool empty() const { return positions.empty(); }
};

struct ScTrace {
  BitVector u_hat;                    // length N, zeros on frozen positions
  std::vector<double> decision_llrs;  // leaf LLR seen at each position (pre-flip)
  std::uint64_t visits = 0;           // scalar f/g evaluations spent producing this trace
};

enum class CheckNodeRule { exact, min_sum };

// Successive-cancellation engine over the full code tree. All intermediate
// per-level LLR and partial-sum blocks are retained, so a decode that changes
// only decisions at positions >= i restarts at phase i and recomputes just the
// blocks a fresh pass would compute from that phase on.
class ScDecoder {
 public:
  explicit ScDecoder(const CodeConfig& cfg, CheckNodeRule rule = CheckNodeRule::exact);

  // Install channel LLRs (natural transmitted order). Clears decode state.
  void load(std::span<const double> channel_llrs);

  // Decode under the given flip set, reusing work from the previous decode on
  // the same channel LLRs. trace().visits counts only newly computed f/g values.
  const ScTrace& decode(const FlipSet& flips = FlipSet{});

  const ScTrace& trace() const { return trace_; }
  const CodeConfig& config() const { return *cfg_; }

  static constexpr double kLlrMax = 120.0;

 private:
  void compute_llrs(int level, int idx);
  void propagate_bits(int level, int idx);
  double f(double a, double b) const;
  double g(double a, double b, std::uint8_t u) const;

  const CodeConfig* cfg_;
  CheckNodeRule rule_;
  int n_, N_;
  std::vector<std::vector<double>> llr_;      // [level][N], block (level, b) at offset b*2^(n-level)
  std::vector<std::vector<std::uint8_t>> bits_;
  std::vector<int> flips_;  // flip set of the last completed pass
  bool loaded_ = false;
  bool has_pass_ = false;
  std::uint64_t pass_visits_ = 0;
  ScTrace trace_;
};

// One-shot full decodes (fresh engine; visits = N*log2(N)).
ScTrace sc_decode(std::span<const double> channel_llrs, const CodeConfig& cfg);
ScTrace sc_decode_flip(std::span<const double> channel_llrs, const CodeConfig& cfg,
                       const FlipSet& flips);

inline std::uint64_t visit_count(const ScTrace& t) { return t.visits; }

}  // namespace polar
