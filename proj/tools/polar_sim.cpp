// Monte Carlo driver for the polar codec: code construction, critical sets,
// and BLER / accuracy / complexity sweeps over the BI-AWGN channel.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "polar/critical_set.hpp"
#include "polar/io.hpp"
#include "polar/sim.hpp"

namespace {

using namespace polar;

struct CommonArgs {
  std::string code_path;
  std::vector<double> snr;
  std::uint64_t trials = 10000;
  std::string decoder = "sc";
  std::string params_path;
  bool no_prune = false;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::uint64_t max_block_errors = 200;
  int threads = 0;
  bool noiseless = false;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool fixed_decoder) {
  cmd->add_option("--code", a.code_path, "code config JSON file")->required();
  cmd->add_option("--snr", a.snr, "Eb/N0 points in dB")->required()->delimiter(',');
  cmd->add_option("--trials", a.trials, "Monte Carlo trials per point");
  if (!fixed_decoder)
    cmd->add_option("--decoder", a.decoder, "sc | flip:L | cascl:L | genie:k");
  cmd->add_option("--params", a.params_path,
                  "flip decoder parameter JSON (default: built-in table per SNR)");
  cmd->add_flag("--no-prune", a.no_prune, "disable both flip-search pruning rules");
  cmd->add_option("--seed", a.seed, "base seed; trial t uses seed base+t");
  cmd->add_option("--out", a.out, "output file (default: stdout)");
  cmd->add_option("--format", a.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--max-block-errors", a.max_block_errors,
                  "stop a point after this many block errors (0 = never)");
  cmd->add_option("--threads", a.threads, "worker threads (0 = hardware)");
  cmd->add_flag("--noiseless", a.noiseless, "bypass the channel noise (debugging)");
}

SweepConfig to_sweep(const CommonArgs& a) {
  SweepConfig cfg;
  cfg.code = load_code_config(a.code_path);
  cfg.snr_points_db = a.snr;
  cfg.trials = a.trials;
  cfg.decoder = DecoderSpec::parse(a.decoder);
  cfg.base_seed = a.seed;
  cfg.max_block_errors = a.max_block_errors;
  cfg.threads = a.threads;
  cfg.noiseless = a.noiseless;
  cfg.prune_disabled = a.no_prune;
  if (!a.params_path.empty()) {
    FlipParamsFile file = load_flip_params(a.params_path);
    cfg.prune_override = file.prune;
    cfg.node_budget = file.node_budget;
  }
  return cfg;
}

void emit(const std::vector<PointResult>& results, const CommonArgs& a) {
  ResultFormat fmt = a.format == "json" ? ResultFormat::json : ResultFormat::csv;
  if (a.out.empty())
    std::cout << format_results(results, fmt);
  else
    write_results(results, fmt, a.out);
}

int run_construct(int n, int k, double design_snr, int crc_degree,
                  const std::vector<int>& crc_taps, const std::string& out) {
  CrcSpec crc = CrcSpec::none();
  if (crc_degree == 24 && crc_taps.empty())
    crc = CrcSpec::crc24();
  else if (crc_degree > 0)
    crc = CrcSpec{crc_degree, crc_taps};
  CodeConfig cfg = construct_code(n, k, design_snr, crc);
  save_code_config(cfg, out);
  std::cout << "wrote " << out << " (N=" << cfg.block_length << ", K=" << cfg.info_count
            << ", design " << design_snr << " dB)\n";
  return 0;
}

int run_critical_set(const std::string& code_path, int prefix, const std::string& out) {
  CodeConfig cfg = load_code_config(code_path);
  CriticalSet s = modified_critical_set(cfg.frozen_mask, prefix);
  std::string text = "{\"prefix_end\": " + std::to_string(prefix) + ", \"members\": [";
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (i) text += ", ";
    text += std::to_string(s.members[i]);
  }
  text += "]}\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out);
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar code simulator"};
  app.require_subcommand(1);

  // construct
  int c_n = 10, c_k = 512, c_crc_degree = 24;
  double c_design = 2.0;
  std::vector<int> c_taps;
  std::string c_out = "code.json";
  auto* construct = app.add_subcommand("construct", "build a code config file");
  construct->add_option("--n", c_n, "block length exponent (N = 2^n)")->required();
  construct->add_option("--K", c_k, "unfrozen positions, CRC bits included")->required();
  construct->add_option("--design-snr", c_design, "construction Eb/N0 in dB");
  construct->add_option("--crc-degree", c_crc_degree, "CRC degree (0 = none, default 24)");
  construct->add_option("--crc-taps", c_taps, "CRC tap exponents (defaulted for degree 24)")
      ->delimiter(',');
  construct->add_option("--out", c_out, "output path");

  // critical-set
  std::string cs_code, cs_out;
  int cs_prefix = 0;
  auto* cset = app.add_subcommand("critical-set", "print the (modified) critical set");
  cset->add_option("--code", cs_code, "code config JSON file")->required();
  cset->add_option("--prefix", cs_prefix, "freeze positions 1..prefix first (0 = none)");
  cset->add_option("--out", cs_out, "output file (default: stdout)");

  // sweeps
  CommonArgs bler_args, acc_args, cplx_args;
  auto* bler = app.add_subcommand("bler", "block error rate sweep");
  add_common(bler, bler_args, false);
  auto* acc = app.add_subcommand("accuracy", "SC first-error critical-set accuracy sweep");
  add_common(acc, acc_args, true);
  auto* cplx = app.add_subcommand("complexity", "BLER sweep (complexity column emphasized)");
  add_common(cplx, cplx_args, false);

  // design-sweep: per-point reconstruction, SC accuracy statistics
  int t_n = 10, t_k = 512;
  CommonArgs t_args;
  auto* survey = app.add_subcommand("design-sweep", "per-SNR construction + SC accuracy table");
  survey->add_option("--n", t_n, "block length exponent");
  survey->add_option("--K", t_k, "unfrozen positions");
  survey->add_option("--snr", t_args.snr, "Eb/N0 points in dB")->delimiter(',');
  survey->add_option("--trials", t_args.trials, "trials per point");
  survey->add_option("--seed", t_args.seed, "base seed");
  survey->add_option("--out", t_args.out, "output file (default: stdout table)");
  survey->add_option("--format", t_args.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  survey->add_option("--threads", t_args.threads, "worker threads (0 = hardware)");
  survey->add_option("--max-block-errors", t_args.max_block_errors,
                     "stop a point after this many block errors (0 = never)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return run_construct(c_n, c_k, c_design, c_crc_degree, c_taps, c_out);
    if (cset->parsed()) return run_critical_set(cs_code, cs_prefix, cs_out);
    if (bler->parsed()) {
      emit(run_bler(to_sweep(bler_args)), bler_args);
      return 0;
    }
    if (cplx->parsed()) {
      emit(run_bler(to_sweep(cplx_args)), cplx_args);
      return 0;
    }
    if (acc->parsed()) {
      emit(run_accuracy(to_sweep(acc_args)), acc_args);
      return 0;
    }
    if (survey->parsed()) {
      if (t_args.snr.empty()) t_args.snr = {1.0, 1.5, 2.0, 2.5, 3.0};
      std::vector<PointResult> rows;
      for (double snr : t_args.snr) {
        SweepConfig cfg;
        cfg.code = construct_code(t_n, t_k, snr, CrcSpec::none());
        cfg.snr_points_db = {snr};
        cfg.trials = t_args.trials;
        cfg.decoder = DecoderSpec::parse("sc");
        cfg.base_seed = t_args.seed;
        cfg.max_block_errors = t_args.max_block_errors;
        cfg.threads = t_args.threads;
        auto r = run_accuracy(cfg);
        rows.push_back(r.at(0));
      }
      if (!t_args.out.empty()) {
        ResultFormat fmt = t_args.format == "json" ? ResultFormat::json : ResultFormat::csv;
        write_results(rows, fmt, t_args.out);
      } else {
        std::printf("%8s %10s %10s %12s %10s %7s\n", "EbN0_dB", "trials", "failures",
                    "first_in_S", "accuracy", "|S|");
        for (const auto& r : rows)
          std::printf("%8.2f %10llu %10llu %12llu %10.4f %7d\n", r.snr_db,
                      static_cast<unsigned long long>(r.trials),
                      static_cast<unsigned long long>(r.failing_trials),
                      static_cast<unsigned long long>(r.first_error_in_set),
                      r.accuracy.value_or(0.0), r.critical_set_size.value_or(0));
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
