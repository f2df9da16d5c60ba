#pragma once

#include <optional>
#include <string>

#include "polar/channel.hpp"
#include "polar/code.hpp"
#include "polar/progressive.hpp"

namespace polar {

enum class DecoderKind { sc, flip, cascl, genie };

// Textual decoder specs: "sc", "flip:L", "cascl:L", "genie:k".
struct DecoderSpec {
  DecoderKind kind = DecoderKind::sc;
  int param = 0;

  static DecoderSpec parse(const std::string& text);
  std::string to_string() const;
};

struct SweepConfig {
  CodeConfig code;
  std::vector<double> snr_points_db;
  std::uint64_t trials = 0;
  DecoderSpec decoder;
  std::uint64_t base_seed = 1;
  // Stop a point early once this many block errors accumulate (0 = never).
  std::uint64_t max_block_errors = 200;
  int threads = 0;  // 0 = hardware concurrency
  bool noiseless = false;

  // Progressive-decoder knobs. When prune_override is empty the Table
  // defaults at each operating SNR apply; prune_disabled turns both rules off.
  std::optional<PruneParams> prune_override;
  bool prune_disabled = false;
  std::uint64_t node_budget = 0;
};

struct TrialRecord {
  std::uint64_t trial_index = 0;
  std::uint64_t seed = 0;
  bool crc_ok = false;
  bool block_error = false;
  std::optional<int> first_error_index;  // failing SC trials only
  bool first_error_in_critical_set = false;
  std::uint64_t visits = 0;
  std::uint64_t nodes_explored = 0;
};

struct PointResult {
  double snr_db = 0.0;
  std::string decoder;
  std::uint64_t trials = 0;
  std::uint64_t block_errors = 0;
  double bler = 0.0;
  double ci_lo = 0.0;  // Wilson 95% interval on the block error rate
  double ci_hi = 0.0;
  double mean_norm_complexity = 0.0;  // mean f/g evaluations / (N log2 N)
  std::optional<double> accuracy;     // failing-trial first-error-in-S ratio (SC runs)
  std::optional<int> critical_set_size;
  std::uint64_t failing_trials = 0;
  std::uint64_t first_error_in_set = 0;
  std::uint64_t crc_collisions = 0;  // CRC passed but the block was wrong
};

// Deterministic per-trial inputs: the message and the noise depend only on
// (base_seed, trial_index), never on the decoder under test.
TrialRecord run_trial(const SweepConfig& cfg, const ChannelParams& params,
                      const GaProfile& profile, std::uint64_t trial_index);

std::vector<PointResult> run_bler(const SweepConfig& cfg);

// SC-only sweep that also reports the first-error-in-critical-set accuracy.
std::vector<PointResult> run_accuracy(const SweepConfig& cfg);

void wilson_interval(std::uint64_t errors, std::uint64_t trials, double& lo, double& hi);

enum class ResultFormat { csv, json };

std::string format_results(const std::vector<PointResult>& results, ResultFormat fmt);
void write_results(const std::vector<PointResult>& results, ResultFormat fmt,
                   const std::string& path);

}  // namespace polar
