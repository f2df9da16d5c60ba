#include "polar/list_decoder.hpp"

#include <algorithm>
#include <cmath>

#include "polar/crc.hpp"

namespace polar {

namespace {

double clamp_llr(double v) { return std::clamp(v, -ScDecoder::kLlrMax, ScDecoder::kLlrMax); }

double penalty(double llr, std::uint8_t u) {
  // pay |llr| when the decision opposes the LLR sign (llr >= 0 favors 0)
  if ((llr >= 0.0 && u == 0) || (llr < 0.0 && u == 1)) return 0.0;
  return std::abs(llr);
}

}  // namespace

ListDecoder::ListDecoder(const CodeConfig& cfg, int list_size, CheckNodeRule rule)
    : cfg_(&cfg), L_(list_size), n_(cfg.n), N_(cfg.block_length), rule_(rule) {
  cfg.validate();
  if (list_size < 1 || list_size > 1024)
    throw std::invalid_argument("list decoder: list size must be in [1, 1024]");
  slots_.resize(static_cast<std::size_t>(n_) + 1);
  refcnt_.resize(static_cast<std::size_t>(n_) + 1);
  path_slot_.resize(static_cast<std::size_t>(n_) + 1);
  free_slots_.resize(static_cast<std::size_t>(n_) + 1);
  for (int lev = 0; lev <= n_; ++lev) {
    std::size_t len = static_cast<std::size_t>(1) << (n_ - lev);
    slots_[static_cast<std::size_t>(lev)].resize(static_cast<std::size_t>(L_));
    for (auto& s : slots_[static_cast<std::size_t>(lev)]) {
      s.llr.assign(len, 0.0);
      s.c.assign(2 * len, 0);
    }
    refcnt_[static_cast<std::size_t>(lev)].assign(static_cast<std::size_t>(L_), 0);
    path_slot_[static_cast<std::size_t>(lev)].assign(static_cast<std::size_t>(L_), -1);
  }
  active_.assign(static_cast<std::size_t>(L_), 0);
  metric_.assign(static_cast<std::size_t>(L_), 0.0);
  u_.assign(static_cast<std::size_t>(L_), BitVector(static_cast<std::size_t>(N_), 0));
}

void ListDecoder::reset() {
  for (int lev = 0; lev <= n_; ++lev) {
    auto& fs = free_slots_[static_cast<std::size_t>(lev)];
    fs.clear();
    for (int s = L_ - 1; s >= 1; --s) fs.push_back(s);
    std::fill(refcnt_[static_cast<std::size_t>(lev)].begin(),
              refcnt_[static_cast<std::size_t>(lev)].end(), 0);
    std::fill(path_slot_[static_cast<std::size_t>(lev)].begin(),
              path_slot_[static_cast<std::size_t>(lev)].end(), -1);
    refcnt_[static_cast<std::size_t>(lev)][0] = 1;
    path_slot_[static_cast<std::size_t>(lev)][0] = 0;
  }
  free_paths_.clear();
  for (int p = L_ - 1; p >= 1; --p) free_paths_.push_back(p);
  std::fill(active_.begin(), active_.end(), 0);
  active_[0] = 1;
  std::fill(metric_.begin(), metric_.end(), 0.0);
  for (auto& u : u_) std::fill(u.begin(), u.end(), 0);
  visits_ = 0;
}

int ListDecoder::writable_slot(int level, int path) {
  int s = path_slot_[static_cast<std::size_t>(level)][static_cast<std::size_t>(path)];
  auto& rc = refcnt_[static_cast<std::size_t>(level)];
  if (rc[static_cast<std::size_t>(s)] == 1) return s;
  --rc[static_cast<std::size_t>(s)];
  int fresh = free_slots_[static_cast<std::size_t>(level)].back();
  free_slots_[static_cast<std::size_t>(level)].pop_back();
  slots_[static_cast<std::size_t>(level)][static_cast<std::size_t>(fresh)] =
      slots_[static_cast<std::size_t>(level)][static_cast<std::size_t>(s)];
  rc[static_cast<std::size_t>(fresh)] = 1;
  path_slot_[static_cast<std::size_t>(level)][static_cast<std::size_t>(path)] = fresh;
  return fresh;
}

int ListDecoder::clone_path(int path) {
  int fresh = free_paths_.back();
  free_paths_.pop_back();
  active_[static_cast<std::size_t>(fresh)] = 1;
  metric_[static_cast<std::size_t>(fresh)] = metric_[static_cast<std::size_t>(path)];
  u_[static_cast<std::size_t>(fresh)] = u_[static_cast<std::size_t>(path)];
  for (int lev = 0; lev <= n_; ++lev) {
    int s = path_slot_[static_cast<std::size_t>(lev)][static_cast<std::size_t>(path)];
    path_slot_[static_cast<std::size_t>(lev)][static_cast<std::size_t>(fresh)] = s;
    ++refcnt_[static_cast<std::size_t>(lev)][static_cast<std::size_t>(s)];
  }
  return fresh;
}

void ListDecoder::kill_path(int path) {
  active_[static_cast<std::size_t>(path)] = 0;
  free_paths_.push_back(path);
  for (int lev = 0; lev <= n_; ++lev) {
    int s = path_slot_[static_cast<std::size_t>(lev)][static_cast<std::size_t>(path)];
    if (--refcnt_[static_cast<std::size_t>(lev)][static_cast<std::size_t>(s)] == 0)
      free_slots_[static_cast<std::size_t>(lev)].push_back(s);
    path_slot_[static_cast<std::size_t>(lev)][static_cast<std::size_t>(path)] = -1;
  }
}

void ListDecoder::calc_llr(int path, int level, int phase) {
  if (level == 0) return;
  if ((phase & 1) == 0) calc_llr(path, level - 1, phase >> 1);
  const std::size_t len = static_cast<std::size_t>(1) << (n_ - level);
  const auto& up =
      slots_[static_cast<std::size_t>(level) - 1]
            [static_cast<std::size_t>(
                 path_slot_[static_cast<std::size_t>(level) - 1][static_cast<std::size_t>(path)])]
                .llr;
  auto& slot =
      slots_[static_cast<std::size_t>(level)]
            [static_cast<std::size_t>(writable_slot(level, path))];
  if ((phase & 1) == 0) {
    for (std::size_t b = 0; b < len; ++b) {
      double x = up[2 * b], y = up[2 * b + 1];
      if (rule_ == CheckNodeRule::min_sum) {
        double s = (x >= 0.0) == (y >= 0.0) ? 1.0 : -1.0;
        slot.llr[b] = s * std::min(std::abs(x), std::abs(y));
      } else {
        double s = (x >= 0.0) == (y >= 0.0) ? 1.0 : -1.0;
        double m = s * std::min(std::abs(x), std::abs(y));
        slot.llr[b] = clamp_llr(m + std::log1p(std::exp(-std::abs(x + y))) -
                                std::log1p(std::exp(-std::abs(x - y))));
      }
    }
  } else {
    for (std::size_t b = 0; b < len; ++b) {
      double x = up[2 * b], y = up[2 * b + 1];
      slot.llr[b] = clamp_llr(slot.c[2 * b] ? y - x : y + x);
    }
  }
  visits_ += len;
}

void ListDecoder::update_c(int path, int level, int phase) {
  if (level == 0 || (phase & 1) == 0) return;
  const std::size_t len = static_cast<std::size_t>(1) << (n_ - level);
  const auto& cur =
      slots_[static_cast<std::size_t>(level)]
            [static_cast<std::size_t>(
                 path_slot_[static_cast<std::size_t>(level)][static_cast<std::size_t>(path)])]
                .c;
  auto& up = slots_[static_cast<std::size_t>(level) - 1]
                   [static_cast<std::size_t>(writable_slot(level - 1, path))]
                       .c;
  int parent_phase = phase >> 1;
  std::size_t col = static_cast<std::size_t>(parent_phase & 1);
  for (std::size_t b = 0; b < len; ++b) {
    up[4 * b + col] = cur[2 * b] ^ cur[2 * b + 1];
    up[4 * b + 2 + col] = cur[2 * b + 1];
  }
  update_c(path, level - 1, parent_phase);
}

DecodeOutcome ListDecoder::decode(std::span<const double> channel_llrs) {
  if (channel_llrs.size() != static_cast<std::size_t>(N_))
    throw std::invalid_argument("list decoder: channel LLR length != N");
  reset();
  {
    auto& root = slots_[0][static_cast<std::size_t>(path_slot_[0][0])].llr;
    for (int j = 0; j < N_; ++j) root[static_cast<std::size_t>(j)] = clamp_llr(channel_llrs[static_cast<std::size_t>(j)]);
  }

  struct Fork {
    double metric;
    int path;
    std::uint8_t bit;
  };
  std::vector<Fork> forks;
  std::vector<std::uint8_t> keep0(static_cast<std::size_t>(L_)), keep1(static_cast<std::size_t>(L_));

  for (int phase = 0; phase < N_; ++phase) {
    for (int p = 0; p < L_; ++p)
      if (active_[static_cast<std::size_t>(p)]) calc_llr(p, n_, phase);

    if (cfg_->is_frozen(phase + 1)) {
      for (int p = 0; p < L_; ++p) {
        if (!active_[static_cast<std::size_t>(p)]) continue;
        double llr =
            slots_[static_cast<std::size_t>(n_)]
                  [static_cast<std::size_t>(
                       path_slot_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(p)])]
                      .llr[0];
        metric_[static_cast<std::size_t>(p)] += penalty(llr, 0);
        auto& slot = slots_[static_cast<std::size_t>(n_)]
                           [static_cast<std::size_t>(writable_slot(n_, p))];
        slot.c[static_cast<std::size_t>(phase & 1)] = 0;
      }
    } else {
      forks.clear();
      for (int p = 0; p < L_; ++p) {
        if (!active_[static_cast<std::size_t>(p)]) continue;
        double llr =
            slots_[static_cast<std::size_t>(n_)]
                  [static_cast<std::size_t>(
                       path_slot_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(p)])]
                      .llr[0];
        double m = metric_[static_cast<std::size_t>(p)];
        forks.push_back(Fork{m + penalty(llr, 0), p, 0});
        forks.push_back(Fork{m + penalty(llr, 1), p, 1});
      }
      std::sort(forks.begin(), forks.end(), [](const Fork& a, const Fork& b) {
        if (a.metric != b.metric) return a.metric < b.metric;
        if (a.path != b.path) return a.path < b.path;
        return a.bit < b.bit;
      });
      std::size_t kept = std::min(forks.size(), static_cast<std::size_t>(L_));
      std::fill(keep0.begin(), keep0.end(), 0);
      std::fill(keep1.begin(), keep1.end(), 0);
      for (std::size_t i = 0; i < kept; ++i)
        (forks[i].bit ? keep1 : keep0)[static_cast<std::size_t>(forks[i].path)] = 1;

      for (int p = 0; p < L_; ++p)
        if (active_[static_cast<std::size_t>(p)] && !keep0[static_cast<std::size_t>(p)] &&
            !keep1[static_cast<std::size_t>(p)])
          kill_path(p);

      for (int p = 0; p < L_; ++p) {
        if (!keep0[static_cast<std::size_t>(p)] && !keep1[static_cast<std::size_t>(p)]) continue;
        double llr =
            slots_[static_cast<std::size_t>(n_)]
                  [static_cast<std::size_t>(
                       path_slot_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(p)])]
                      .llr[0];
        if (keep0[static_cast<std::size_t>(p)] && keep1[static_cast<std::size_t>(p)]) {
          int q = clone_path(p);
          metric_[static_cast<std::size_t>(p)] += penalty(llr, 0);
          metric_[static_cast<std::size_t>(q)] += penalty(llr, 1);
          u_[static_cast<std::size_t>(p)][static_cast<std::size_t>(phase)] = 0;
          u_[static_cast<std::size_t>(q)][static_cast<std::size_t>(phase)] = 1;
          slots_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(writable_slot(n_, p))]
              .c[static_cast<std::size_t>(phase & 1)] = 0;
          slots_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(writable_slot(n_, q))]
              .c[static_cast<std::size_t>(phase & 1)] = 1;
        } else {
          std::uint8_t bit = keep1[static_cast<std::size_t>(p)] ? 1 : 0;
          metric_[static_cast<std::size_t>(p)] += penalty(llr, bit);
          u_[static_cast<std::size_t>(p)][static_cast<std::size_t>(phase)] = bit;
          slots_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(writable_slot(n_, p))]
              .c[static_cast<std::size_t>(phase & 1)] = bit;
        }
      }
    }

    if (phase & 1)
      for (int p = 0; p < L_; ++p)
        if (active_[static_cast<std::size_t>(p)]) update_c(p, n_, phase);
  }

  int winner = -1;
  bool winner_crc = false;
  for (int p = 0; p < L_; ++p) {
    if (!active_[static_cast<std::size_t>(p)]) continue;
    bool ok = cfg_->crc.enabled() &&
              crc_check(extract_frame(*cfg_, u_[static_cast<std::size_t>(p)]), cfg_->crc);
    if (winner < 0 || (ok && !winner_crc) ||
        (ok == winner_crc &&
         metric_[static_cast<std::size_t>(p)] < metric_[static_cast<std::size_t>(winner)])) {
      winner = p;
      winner_crc = ok;
    }
  }
  return DecodeOutcome{u_[static_cast<std::size_t>(winner)], winner_crc, visits_};
}

DecodeOutcome ca_scl_decode(std::span<const double> channel_llrs, const CodeConfig& cfg,
                            int list_size) {
  ListDecoder dec(cfg, list_size, CheckNodeRule::exact);
  return dec.decode(channel_llrs);
}

}  // namespace polar
