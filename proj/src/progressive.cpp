#include "polar/progressive.hpp"

#include <algorithm>
#include <cmath>

namespace polar {

PruneParams PruneParams::table_defaults(double ebn0_db) {
  struct Row {
    double snr, gl, gr, w2, w3;
  };
  static const Row rows[] = {
      {1.50, 3.6, 2.0, 0.50, 0.25},
      {1.75, 3.6, 2.0, 0.50, 0.25},
      {2.00, 3.6, 2.0, 0.50, 0.25},
      {2.25, 4.0, 3.0, 0.60, 0.30},
      {2.50, 6.0, 5.0, 0.60, 0.30},
  };
  const Row* best = &rows[0];
  for (const Row& r : rows)
    if (std::abs(r.snr - ebn0_db) < std::abs(best->snr - ebn0_db)) best = &r;
  PruneParams p;
  p.gamma_left = best->gl;
  p.gamma_right = best->gr;
  p.omega.assign(5, std::nullopt);
  p.omega[2] = best->w2;
  p.omega[3] = best->w3;
  return p;
}

std::vector<int> flip_order(const CriticalSet& candidates, const ScTrace& trace,
                            const GaProfile& profile) {
  struct Entry {
    double ratio;
    int index;
  };
  std::vector<Entry> entries;
  entries.reserve(candidates.members.size());
  for (int i : candidates.members) {
    if (i < 1 || static_cast<std::size_t>(i) > trace.decision_llrs.size() ||
        static_cast<std::size_t>(i) > profile.means.size())
      throw std::invalid_argument("flip_order: candidate index out of range");
    double mu = profile.means[static_cast<std::size_t>(i) - 1];
    if (!(mu > 0.0)) throw std::invalid_argument("flip_order: candidate has no positive GA mean");
    entries.push_back(
        Entry{std::abs(trace.decision_llrs[static_cast<std::size_t>(i) - 1]) / mu, i});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.ratio != b.ratio) return a.ratio < b.ratio;
    return a.index < b.index;
  });
  std::vector<int> order;
  order.reserve(entries.size());
  for (const auto& e : entries) order.push_back(e.index);
  return order;
}

bool e_not_select(double llr_mag, double mu, const PruneParams& params) {
  if (!(mu > 0.0)) throw std::domain_error("e_not_select: mu must be > 0");
  return llr_mag > mu + params.gamma_right * std::sqrt(2.0 * mu);
}

bool e_no_child(const ScTrace& trace, int after, const CodeConfig& cfg,
                const GaProfile& profile, const PruneParams& params, int level,
                const CriticalSet& exclude) {
  auto omega = params.omega_at(level);
  if (!omega.has_value()) return false;
  std::uint64_t counted = 0, suspicious = 0;
  for (int j = after + 1; j <= cfg.block_length; ++j) {
    if (cfg.is_frozen(j) || exclude.contains(j)) continue;
    ++counted;
    double mu = profile.means[static_cast<std::size_t>(j) - 1];
    double thr = mu - params.gamma_left * std::sqrt(2.0 * mu);
    if (std::abs(trace.decision_llrs[static_cast<std::size_t>(j) - 1]) < thr) ++suspicious;
  }
  if (counted == 0) return false;
  return static_cast<double>(suspicious) / static_cast<double>(counted) >= *omega;
}

ProgressiveDecoder::ProgressiveDecoder(const CodeConfig& cfg, GaProfile profile,
                                       PruneParams params, int max_level,
                                       std::uint64_t node_budget)
    : cfg_(&cfg),
      profile_(std::move(profile)),
      params_(std::move(params)),
      max_level_(max_level),
      budget_(node_budget),
      engine_(cfg),
      csets_(cfg) {
  if (max_level < 0) throw std::invalid_argument("progressive: max_level must be >= 0");
  if (!cfg.crc.enabled())
    throw std::invalid_argument("progressive: the search needs a CRC-enabled code");
  if (profile_.means.size() != static_cast<std::size_t>(cfg.block_length))
    throw std::invalid_argument("progressive: GA profile length != N");
}

ProgressiveResult ProgressiveDecoder::decode(std::span<const double> channel_llrs) {
  engine_.load(channel_llrs);
  const ScTrace& root = engine_.decode();

  ProgressiveResult res;
  res.nodes_explored = 1;
  res.total_visits = root.visits;

  auto passes_crc = [&](const ScTrace& tr) {
    return crc_check(extract_frame(*cfg_, tr.u_hat), cfg_->crc);
  };
  if (observer_) observer_(0, FlipSet{});
  if (passes_crc(root)) {
    res.u_hat = root.u_hat;
    res.crc_ok = true;
    return res;
  }
  res.u_hat = root.u_hat;  // level-0 estimate, returned on exhaustion
  if (max_level_ == 0) return res;

  const CriticalSet& s = csets_.at_prefix(0);
  std::uint64_t budget = budget_ ? budget_ : 4ull * s.size() * static_cast<std::uint64_t>(max_level_);
  if (budget < 1) budget = 1;

  std::vector<std::vector<int>> queue;
  for (int i : flip_order(s, root, profile_)) queue.push_back({i});

  for (int level = 1; level <= max_level_ && !queue.empty(); ++level) {
    std::vector<std::vector<int>> next_queue;
    for (auto& flips : queue) {
      if (res.nodes_explored >= budget) return res;
      const ScTrace& tr = engine_.decode(FlipSet{flips});
      ++res.nodes_explored;
      res.total_visits += tr.visits;
      if (observer_) observer_(level, FlipSet{flips});
      if (passes_crc(tr)) {
        res.u_hat = tr.u_hat;
        res.crc_ok = true;
        res.winning_flips = FlipSet{std::move(flips)};
        return res;
      }
      if (level == max_level_) continue;
      int last = flips.back();
      const CriticalSet& children = csets_.at_prefix(last);
      if (children.members.empty()) continue;
      if (e_no_child(tr, last, *cfg_, profile_, params_, level, children)) continue;
      CriticalSet kept;
      for (int i : children.members) {
        double mu = profile_.means[static_cast<std::size_t>(i) - 1];
        if (!e_not_select(std::abs(tr.decision_llrs[static_cast<std::size_t>(i) - 1]), mu, params_))
          kept.members.push_back(i);
      }
      for (int i : flip_order(kept, tr, profile_)) {
        std::vector<int> child = flips;
        child.push_back(i);
        next_queue.push_back(std::move(child));
      }
    }
    queue.swap(next_queue);
  }
  return res;
}

ProgressiveResult progressive_decode(std::span<const double> channel_llrs,
                                     const CodeConfig& cfg, const GaProfile& profile,
                                     int max_level, const PruneParams& params) {
  ProgressiveDecoder dec(cfg, profile, params, max_level);
  return dec.decode(channel_llrs);
}

}  // namespace polar
