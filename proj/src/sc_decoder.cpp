#include "polar/sc_decoder.hpp"

#include <algorithm>
#include <cmath>

namespace polar {

bool FlipSet::contains(int index1) const {
  return std::binary_search(positions.begin(), positions.end(), index1);
}

namespace {

void validate_flips(const FlipSet& flips, const CodeConfig& cfg) {
  int prev = 0;
  for (int p : flips.positions) {
    if (p < 1 || p > cfg.block_length)
      throw std::invalid_argument("flip set: position out of range");
    if (p <= prev) throw std::invalid_argument("flip set: positions must be strictly increasing");
    if (cfg.is_frozen(p)) throw std::invalid_argument("flip set: frozen position");
    prev = p;
  }
}

// First phase (0-based) whose decision may differ between the two flip sets:
// the smallest position in their symmetric difference. N if the sets match.
int divergence_phase(const std::vector<int>& a, const std::vector<int>& b, int N) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else {
      return std::min(a[i], b[j]) - 1;
    }
  }
  if (i < a.size()) return a[i] - 1;
  if (j < b.size()) return b[j] - 1;
  return N;
}

}  // namespace

ScDecoder::ScDecoder(const CodeConfig& cfg, CheckNodeRule rule)
    : cfg_(&cfg), rule_(rule), n_(cfg.n), N_(cfg.block_length) {
  cfg.validate();
  llr_.assign(static_cast<std::size_t>(n_) + 1, std::vector<double>(static_cast<std::size_t>(N_)));
  bits_.assign(static_cast<std::size_t>(n_) + 1,
               std::vector<std::uint8_t>(static_cast<std::size_t>(N_)));
  trace_.u_hat.assign(static_cast<std::size_t>(N_), 0);
  trace_.decision_llrs.assign(static_cast<std::size_t>(N_), 0.0);
}

void ScDecoder::load(std::span<const double> channel_llrs) {
  if (channel_llrs.size() != static_cast<std::size_t>(N_))
    throw std::invalid_argument("sc: channel LLR length != N");
  for (int j = 0; j < N_; ++j)
    llr_[0][static_cast<std::size_t>(j)] =
        std::clamp(channel_llrs[static_cast<std::size_t>(j)], -kLlrMax, kLlrMax);
  loaded_ = true;
  has_pass_ = false;
  flips_.clear();
}

double ScDecoder::f(double a, double b) const {
  if (rule_ == CheckNodeRule::min_sum) {
    double s = (a >= 0.0) == (b >= 0.0) ? 1.0 : -1.0;
    return s * std::min(std::abs(a), std::abs(b));
  }
  // log((1 + e^{a+b}) / (e^a + e^b)) in overflow-free form
  double s = (a >= 0.0) == (b >= 0.0) ? 1.0 : -1.0;
  double m = s * std::min(std::abs(a), std::abs(b));
  double v = m + std::log1p(std::exp(-std::abs(a + b))) - std::log1p(std::exp(-std::abs(a - b)));
  return std::clamp(v, -kLlrMax, kLlrMax);
}

double ScDecoder::g(double a, double b, std::uint8_t u) const {
  double v = u ? b - a : b + a;
  return std::clamp(v, -kLlrMax, kLlrMax);
}

void ScDecoder::compute_llrs(int level, int idx) {
  if (level == 0) return;
  if ((idx & 1) == 0) compute_llrs(level - 1, idx >> 1);
  const int size = 1 << (n_ - level);
  const std::size_t off = static_cast<std::size_t>(idx) * static_cast<std::size_t>(size);
  const std::size_t poff = (static_cast<std::size_t>(idx) >> 1) * (static_cast<std::size_t>(size) * 2);
  const auto& up = llr_[static_cast<std::size_t>(level) - 1];
  auto& cur = llr_[static_cast<std::size_t>(level)];
  if ((idx & 1) == 0) {
    for (int j = 0; j < size; ++j)
      cur[off + static_cast<std::size_t>(j)] =
          f(up[poff + 2 * static_cast<std::size_t>(j)], up[poff + 2 * static_cast<std::size_t>(j) + 1]);
  } else {
    const auto& left = bits_[static_cast<std::size_t>(level)];
    const std::size_t loff = off - static_cast<std::size_t>(size);
    for (int j = 0; j < size; ++j)
      cur[off + static_cast<std::size_t>(j)] =
          g(up[poff + 2 * static_cast<std::size_t>(j)], up[poff + 2 * static_cast<std::size_t>(j) + 1],
            left[loff + static_cast<std::size_t>(j)]);
  }
  pass_visits_ += static_cast<std::uint64_t>(size);
}

void ScDecoder::propagate_bits(int level, int idx) {
  if (level == 0 || (idx & 1) == 0) return;
  const int size = 1 << (n_ - level);
  const std::size_t roff = static_cast<std::size_t>(idx) * static_cast<std::size_t>(size);
  const std::size_t loff = roff - static_cast<std::size_t>(size);
  const std::size_t poff = (static_cast<std::size_t>(idx) >> 1) * (static_cast<std::size_t>(size) * 2);
  const auto& cur = bits_[static_cast<std::size_t>(level)];
  auto& up = bits_[static_cast<std::size_t>(level) - 1];
  for (int j = 0; j < size; ++j) {
    up[poff + 2 * static_cast<std::size_t>(j)] =
        cur[loff + static_cast<std::size_t>(j)] ^ cur[roff + static_cast<std::size_t>(j)];
    up[poff + 2 * static_cast<std::size_t>(j) + 1] = cur[roff + static_cast<std::size_t>(j)];
  }
  propagate_bits(level - 1, idx >> 1);
}

const ScTrace& ScDecoder::decode(const FlipSet& flips) {
  if (!loaded_) throw std::logic_error("sc: decode before load");
  validate_flips(flips, *cfg_);
  pass_visits_ = 0;
  int start = has_pass_ ? divergence_phase(flips_, flips.positions, N_) : 0;
  for (int phase = start; phase < N_; ++phase) {
    compute_llrs(n_, phase);
    double llr = llr_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(phase)];
    std::uint8_t u = 0;
    if (!cfg_->is_frozen(phase + 1)) {
      u = llr >= 0.0 ? 0 : 1;
      if (flips.contains(phase + 1)) u ^= 1;
    }
    trace_.decision_llrs[static_cast<std::size_t>(phase)] = llr;
    trace_.u_hat[static_cast<std::size_t>(phase)] = u;
    bits_[static_cast<std::size_t>(n_)][static_cast<std::size_t>(phase)] = u;
    propagate_bits(n_, phase);
  }
  trace_.visits = pass_visits_;
  flips_ = flips.positions;
  has_pass_ = true;
  return trace_;
}

ScTrace sc_decode(std::span<const double> channel_llrs, const CodeConfig& cfg) {
  ScDecoder dec(cfg);
  dec.load(channel_llrs);
  return dec.decode();
}

ScTrace sc_decode_flip(std::span<const double> channel_llrs, const CodeConfig& cfg,
                       const FlipSet& flips) {
  ScDecoder dec(cfg);
  dec.load(channel_llrs);
  return dec.decode(flips);
}

}  // namespace polar
