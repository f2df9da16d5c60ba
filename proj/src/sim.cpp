#include "polar/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <memory>
#include <thread>

#include <json.hpp>

#include "polar/genie.hpp"
#include "polar/list_decoder.hpp"
#include "polar/rng.hpp"

namespace polar {

DecoderSpec DecoderSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  std::string tail = colon == std::string::npos ? "" : text.substr(colon + 1);
  DecoderSpec spec;
  if (head == "sc") {
    spec.kind = DecoderKind::sc;
    if (!tail.empty()) throw std::invalid_argument("decoder spec: sc takes no parameter");
    return spec;
  }
  int param = 0;
  try {
    param = std::stoi(tail);
  } catch (const std::exception&) {
    throw std::invalid_argument("decoder spec '" + text + "': missing numeric parameter");
  }
  if (head == "flip") {
    spec.kind = DecoderKind::flip;
    if (param < 1) throw std::invalid_argument("decoder spec: flip level must be >= 1");
  } else if (head == "cascl") {
    spec.kind = DecoderKind::cascl;
    if (param < 1) throw std::invalid_argument("decoder spec: list size must be >= 1");
  } else if (head == "genie") {
    spec.kind = DecoderKind::genie;
    if (param < 0) throw std::invalid_argument("decoder spec: genie k must be >= 0");
  } else {
    throw std::invalid_argument("decoder spec '" + text + "': unknown decoder");
  }
  spec.param = param;
  return spec;
}

std::string DecoderSpec::to_string() const {
  switch (kind) {
    case DecoderKind::sc:
      return "sc";
    case DecoderKind::flip:
      return "flip:" + std::to_string(param);
    case DecoderKind::cascl:
      return "cascl:" + std::to_string(param);
    case DecoderKind::genie:
      return "genie:" + std::to_string(param);
  }
  return "?";
}

void wilson_interval(std::uint64_t errors, std::uint64_t trials, double& lo, double& hi) {
  if (trials == 0) {
    lo = 0.0;
    hi = 1.0;
    return;
  }
  const double z = 1.959963984540054;  // 95%
  double n = static_cast<double>(trials);
  double p = static_cast<double>(errors) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  lo = std::max(0.0, center - half);
  hi = std::min(1.0, center + half);
}

namespace {

// Trial inputs are a pure function of (base_seed, trial): stream 0 draws the
// message, stream 1 the noise. Decoders under the same seed see identical data.
std::uint64_t stream_seed(std::uint64_t base, std::uint64_t trial, std::uint64_t stream) {
  return splitmix64(base + trial) ^ (stream * 0x9E3779B97F4A7C15ull);
}

struct Accum {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  std::uint64_t failing = 0;
  std::uint64_t first_in_set = 0;
  std::uint64_t collisions = 0;
  std::uint64_t visits = 0;

  void add(const Accum& o) {
    trials += o.trials;
    errors += o.errors;
    failing += o.failing;
    first_in_set += o.first_in_set;
    collisions += o.collisions;
    visits += o.visits;
  }
};

struct Worker {
  const SweepConfig* cfg;
  ChannelParams params;
  GaProfile profile;
  bool track_accuracy;
  CriticalSet cset;

  std::unique_ptr<ScDecoder> sc;
  std::unique_ptr<ProgressiveDecoder> flip;
  std::unique_ptr<ListDecoder> list;

  Worker(const SweepConfig& c, const ChannelParams& p, GaProfile prof, bool accuracy)
      : cfg(&c), params(p), profile(std::move(prof)), track_accuracy(accuracy) {
    switch (c.decoder.kind) {
      case DecoderKind::sc:
      case DecoderKind::genie:
        sc = std::make_unique<ScDecoder>(c.code);
        break;
      case DecoderKind::flip: {
        PruneParams prune = c.prune_disabled ? PruneParams::disabled()
                            : c.prune_override.has_value()
                                ? *c.prune_override
                                : PruneParams::table_defaults(p.ebn0_db);
        flip = std::make_unique<ProgressiveDecoder>(c.code, profile, prune, c.decoder.param,
                                                    c.node_budget);
        break;
      }
      case DecoderKind::cascl:
        list = std::make_unique<ListDecoder>(c.code, c.decoder.param);
        break;
    }
    if (track_accuracy) cset = critical_set(c.code.frozen_mask);
  }

  TrialRecord run(std::uint64_t trial) {
    const CodeConfig& code = cfg->code;
    TrialRecord rec;
    rec.trial_index = trial;
    rec.seed = cfg->base_seed + trial;

    BitVector message =
        random_bits(static_cast<std::size_t>(code.message_length()), stream_seed(cfg->base_seed, trial, 0));
    BitVector u = u_from_message(code, message);
    std::vector<double> x = modulate(encode(code, u));
    std::vector<double> y =
        cfg->noiseless ? x : transmit(x, params, stream_seed(cfg->base_seed, trial, 1));
    std::vector<double> llrs = channel_llrs(y, params);

    BitVector u_hat;
    switch (cfg->decoder.kind) {
      case DecoderKind::sc: {
        sc->load(llrs);
        const ScTrace& tr = sc->decode();
        u_hat = tr.u_hat;
        rec.visits = tr.visits;
        rec.crc_ok = code.crc.enabled() && crc_check(extract_frame(code, u_hat), code.crc);
        rec.nodes_explored = 1;
        if (track_accuracy) {
          auto first = genie_first_error(tr, u);
          if (first.has_value()) {
            rec.first_error_index = first;
            rec.first_error_in_critical_set = cset.contains(*first);
          }
        }
        break;
      }
      case DecoderKind::flip: {
        ProgressiveResult r = flip->decode(llrs);
        u_hat = std::move(r.u_hat);
        rec.visits = r.total_visits;
        rec.crc_ok = r.crc_ok;
        rec.nodes_explored = r.nodes_explored;
        break;
      }
      case DecoderKind::cascl: {
        DecodeOutcome out = list->decode(llrs);
        u_hat = std::move(out.u_hat);
        rec.visits = out.visits;
        rec.crc_ok = out.crc_ok;
        rec.nodes_explored = 1;
        break;
      }
      case DecoderKind::genie: {
        DecodeOutcome out = genie_sc_decode(llrs, code, u, cfg->decoder.param);
        u_hat = std::move(out.u_hat);
        rec.visits = out.visits;
        rec.crc_ok = out.crc_ok;
        rec.nodes_explored = 1;
        break;
      }
    }
    rec.block_error = (u_hat != u);
    return rec;
  }
};

std::vector<PointResult> run_points(const SweepConfig& cfg, bool accuracy_mode) {
  cfg.code.validate();
  if (cfg.trials == 0) throw std::invalid_argument("run: trials must be >= 1");
  if (cfg.snr_points_db.empty()) throw std::invalid_argument("run: no SNR points");
  if (accuracy_mode && cfg.decoder.kind != DecoderKind::sc)
    throw std::invalid_argument("accuracy runs use the sc decoder");
  if ((cfg.decoder.kind == DecoderKind::flip || cfg.decoder.kind == DecoderKind::cascl) &&
      !cfg.code.crc.enabled())
    throw std::invalid_argument("run: decoder needs a CRC-enabled code");

  double rate = static_cast<double>(cfg.code.info_count) / cfg.code.block_length;
  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::uint64_t chunk = 1024;  // early-stop granularity, thread-count independent

  std::vector<PointResult> results;
  for (double snr : cfg.snr_points_db) {
    ChannelParams params = ChannelParams::from_ebn0(snr, rate);
    GaProfile profile = split_channel_means(cfg.code.n, channel_mu_from_ebn0_db(snr, rate));

    std::vector<Worker> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) workers.emplace_back(cfg, params, profile, accuracy_mode);

    Accum total;
    std::uint64_t next = 0;
    while (next < cfg.trials) {
      std::uint64_t count = std::min(chunk, cfg.trials - next);
      // split this chunk across workers; totals do not depend on the split
      std::vector<std::future<Accum>> futs;
      std::uint64_t per = (count + static_cast<std::uint64_t>(threads) - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = next + per * static_cast<std::uint64_t>(t);
        std::uint64_t hi = std::min(next + count, lo + per);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi, t]() {
          Accum a;
          for (std::uint64_t trial = lo; trial < hi; ++trial) {
            TrialRecord rec = workers[static_cast<std::size_t>(t)].run(trial);
            ++a.trials;
            a.visits += rec.visits;
            if (rec.block_error) ++a.errors;
            if (rec.crc_ok && rec.block_error) ++a.collisions;
            if (rec.first_error_index.has_value()) {
              ++a.failing;
              if (rec.first_error_in_critical_set) ++a.first_in_set;
            }
          }
          return a;
        }));
      }
      for (auto& f : futs) total.add(f.get());
      next += count;
      if (cfg.max_block_errors > 0 && total.errors >= cfg.max_block_errors) break;
    }

    PointResult pr;
    pr.snr_db = snr;
    pr.decoder = cfg.decoder.to_string();
    pr.trials = total.trials;
    pr.block_errors = total.errors;
    pr.bler = total.trials ? static_cast<double>(total.errors) / static_cast<double>(total.trials)
                           : 0.0;
    wilson_interval(total.errors, total.trials, pr.ci_lo, pr.ci_hi);
    double norm = static_cast<double>(cfg.code.block_length) * cfg.code.n;
    pr.mean_norm_complexity =
        total.trials ? static_cast<double>(total.visits) / static_cast<double>(total.trials) / norm
                     : 0.0;
    pr.failing_trials = total.failing;
    pr.first_error_in_set = total.first_in_set;
    pr.crc_collisions = total.collisions;
    if (accuracy_mode) {
      pr.critical_set_size = static_cast<int>(critical_set(cfg.code.frozen_mask).size());
      if (total.failing > 0)
        pr.accuracy =
            static_cast<double>(total.first_in_set) / static_cast<double>(total.failing);
    }
    results.push_back(std::move(pr));
  }
  return results;
}

}  // namespace

TrialRecord run_trial(const SweepConfig& cfg, const ChannelParams& params,
                      const GaProfile& profile, std::uint64_t trial_index) {
  Worker w(cfg, params, profile, cfg.decoder.kind == DecoderKind::sc);
  return w.run(trial_index);
}

std::vector<PointResult> run_bler(const SweepConfig& cfg) { return run_points(cfg, false); }

std::vector<PointResult> run_accuracy(const SweepConfig& cfg) { return run_points(cfg, true); }

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string format_results(const std::vector<PointResult>& results, ResultFormat fmt) {
  if (fmt == ResultFormat::csv) {
    std::string out =
        "snr_db,decoder,trials,errors,bler,ci_lo,ci_hi,mean_norm_complexity,accuracy,s_size\n";
    for (const auto& r : results) {
      out += fmt_double(r.snr_db);
      out += ',';
      out += r.decoder;
      out += ',';
      out += std::to_string(r.trials);
      out += ',';
      out += std::to_string(r.block_errors);
      out += ',';
      out += fmt_double(r.bler);
      out += ',';
      out += fmt_double(r.ci_lo);
      out += ',';
      out += fmt_double(r.ci_hi);
      out += ',';
      out += fmt_double(r.mean_norm_complexity);
      out += ',';
      if (r.accuracy.has_value()) out += fmt_double(*r.accuracy);
      out += ',';
      if (r.critical_set_size.has_value()) out += std::to_string(*r.critical_set_size);
      out += '\n';
    }
    return out;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json row{{"snr_db", r.snr_db},
                               {"decoder", r.decoder},
                               {"trials", r.trials},
                               {"errors", r.block_errors},
                               {"bler", r.bler},
                               {"ci_lo", r.ci_lo},
                               {"ci_hi", r.ci_hi},
                               {"mean_norm_complexity", r.mean_norm_complexity},
                               {"accuracy", r.accuracy.has_value()
                                                ? nlohmann::ordered_json(*r.accuracy)
                                                : nlohmann::ordered_json(nullptr)},
                               {"s_size", r.critical_set_size.has_value()
                                              ? nlohmann::ordered_json(*r.critical_set_size)
                                              : nlohmann::ordered_json(nullptr)}};
    arr.push_back(std::move(row));
  }
  nlohmann::ordered_json top{{"results", std::move(arr)}};
  return top.dump(2) + "\n";
}

void write_results(const std::vector<PointResult>& results, ResultFormat fmt,
                   const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << format_results(results, fmt);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace polar
