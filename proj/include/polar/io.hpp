#pragma once

#include <string>

#include "polar/code.hpp"
#include "polar/progressive.hpp"

namespace polar {

// Code files are JSON: {"n", "K", "design_snr_db", "info_set" (1-based),
// "crc": {"degree", "taps"} or null, "mu_profile"}.
void save_code_config(const CodeConfig& cfg, const std::string& path);
CodeConfig load_code_config(const std::string& path);

// Progressive-decoder parameter files: {"gamma_left", "gamma_right",
// "omega" (array, null entries = rule off at that level), "max_level",
// "node_budget"}; gamma_right null = not-select rule off.
struct FlipParamsFile {
  PruneParams prune;
  int max_level = 1;
  std::uint64_t node_budget = 0;
};
void save_flip_params(const FlipParamsFile& params, const std::string& path);
FlipParamsFile load_flip_params(const std::string& path);

}  // namespace polar
