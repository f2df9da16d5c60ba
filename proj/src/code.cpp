#include "polar/code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polar {

namespace {

int reverse_bits(int v, int n) {
  int r = 0;
  for (int b = 0; b < n; ++b) {
    r = (r << 1) | (v & 1);
    v >>= 1;
  }
  return r;
}

}  // namespace

void CodeConfig::validate() const {
  if (n < 1 || n > 30) throw std::invalid_argument("code: n must be in [1, 30]");
  if (block_length != (1 << n)) throw std::invalid_argument("code: block_length != 2^n");
  if (info_count < 1 || info_count > block_length)
    throw std::invalid_argument("code: K must be in [1, N]");
  if (static_cast<int>(info_set.size()) != info_count)
    throw std::invalid_argument("code: info_set size != K");
  if (!std::is_sorted(info_set.begin(), info_set.end()) ||
      std::adjacent_find(info_set.begin(), info_set.end()) != info_set.end())
    throw std::invalid_argument("code: info_set must be strictly ascending");
  if (info_set.front() < 1 || info_set.back() > block_length)
    throw std::invalid_argument("code: info_set index out of range");
  if (frozen_mask.size() != static_cast<std::size_t>(block_length))
    throw std::invalid_argument("code: frozen_mask size != N");
  for (int i = 1; i <= block_length; ++i) {
    bool unfrozen = std::binary_search(info_set.begin(), info_set.end(), i);
    if (unfrozen == (frozen_mask[static_cast<std::size_t>(i) - 1] != 0))
      throw std::invalid_argument("code: frozen_mask disagrees with info_set");
  }
  if (!std::isfinite(design_snr_db)) throw std::invalid_argument("code: design SNR not finite");
  crc.validate();
  if (crc.enabled() && info_count <= crc.degree)
    throw std::invalid_argument("code: K must exceed the CRC degree");
  if (!mu_profile.empty() && mu_profile.size() != static_cast<std::size_t>(block_length))
    throw std::invalid_argument("code: mu_profile size != N");
}

CodeConfig make_code_config(int n, std::vector<int> info_set, double design_snr_db,
                            const CrcSpec& crc) {
  CodeConfig cfg;
  cfg.n = n;
  cfg.block_length = (n >= 1 && n <= 30) ? (1 << n) : 0;
  cfg.info_count = static_cast<int>(info_set.size());
  cfg.design_snr_db = design_snr_db;
  cfg.info_set = std::move(info_set);
  cfg.crc = crc;
  cfg.frozen_mask.assign(static_cast<std::size_t>(std::max(cfg.block_length, 0)), 1);
  for (int i : cfg.info_set)
    if (i >= 1 && i <= cfg.block_length) cfg.frozen_mask[static_cast<std::size_t>(i) - 1] = 0;
  if (cfg.block_length > 0 && cfg.info_count > 0) {
    double rate = static_cast<double>(cfg.info_count) / cfg.block_length;
    cfg.mu_profile = split_channel_means(n, channel_mu_from_ebn0_db(design_snr_db, rate)).means;
  }
  cfg.validate();
  return cfg;
}

CodeConfig construct_code(int n, int K, double design_snr_db, const CrcSpec& crc) {
  if (n < 1 || n > 30) throw std::invalid_argument("construct_code: n must be in [1, 30]");
  int N = 1 << n;
  if (K < 1 || K > N) throw std::invalid_argument("construct_code: K must be in [1, N]");
  double rate = static_cast<double>(K) / N;
  GaProfile profile = split_channel_means(n, channel_mu_from_ebn0_db(design_snr_db, rate));

  std::vector<int> order(static_cast<std::size_t>(N));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (profile.means[static_cast<std::size_t>(a)] != profile.means[static_cast<std::size_t>(b)])
      return profile.means[static_cast<std::size_t>(a)] > profile.means[static_cast<std::size_t>(b)];
    return a < b;
  });
  std::vector<int> info(order.begin(), order.begin() + K);
  for (int& i : info) ++i;  // to 1-based
  std::sort(info.begin(), info.end());

  CodeConfig cfg;
  cfg.n = n;
  cfg.block_length = N;
  cfg.info_count = K;
  cfg.design_snr_db = design_snr_db;
  cfg.info_set = std::move(info);
  cfg.crc = crc;
  cfg.frozen_mask.assign(static_cast<std::size_t>(N), 1);
  for (int i : cfg.info_set) cfg.frozen_mask[static_cast<std::size_t>(i) - 1] = 0;
  cfg.mu_profile = std::move(profile.means);
  cfg.validate();
  return cfg;
}

std::vector<int> bit_reversal_perm(int n) {
  if (n < 1 || n > 30) throw std::invalid_argument("bit_reversal_perm: n must be in [1, 30]");
  int N = 1 << n;
  std::vector<int> perm(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) perm[static_cast<std::size_t>(i)] = reverse_bits(i, n) + 1;
  return perm;
}

BitVector encode(const CodeConfig& cfg, const BitVector& u) {
  if (u.size() != static_cast<std::size_t>(cfg.block_length))
    throw std::invalid_argument("encode: input length != N");
  require_bits(u, "encode");
  for (int i = 1; i <= cfg.block_length; ++i)
    if (cfg.is_frozen(i) && u[static_cast<std::size_t>(i) - 1] != 0)
      throw std::invalid_argument("encode: nonzero bit on frozen position");

  BitVector w = u;
  int N = cfg.block_length;
  for (int half = 1; half < N; half <<= 1)
    for (int base = 0; base < N; base += 2 * half)
      for (int j = 0; j < half; ++j)
        w[static_cast<std::size_t>(base + j)] ^= w[static_cast<std::size_t>(base + half + j)];

  BitVector c(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i)
    c[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(reverse_bits(i, cfg.n))];
  return c;
}

BitVector place_frame(const CodeConfig& cfg, const BitVector& frame) {
  if (frame.size() != static_cast<std::size_t>(cfg.info_count))
    throw std::invalid_argument("place_frame: frame length != K");
  require_bits(frame, "place_frame");
  BitVector u(static_cast<std::size_t>(cfg.block_length), 0);
  for (std::size_t k = 0; k < frame.size(); ++k)
    u[static_cast<std::size_t>(cfg.info_set[k]) - 1] = frame[k];
  return u;
}

BitVector extract_frame(const CodeConfig& cfg, const BitVector& u) {
  if (u.size() != static_cast<std::size_t>(cfg.block_length))
    throw std::invalid_argument("extract_frame: input length != N");
  BitVector frame(static_cast<std::size_t>(cfg.info_count));
  for (std::size_t k = 0; k < frame.size(); ++k)
    frame[k] = u[static_cast<std::size_t>(cfg.info_set[k]) - 1];
  return frame;
}

BitVector u_from_message(const CodeConfig& cfg, const BitVector& message) {
  if (static_cast<int>(message.size()) != cfg.message_length())
    throw std::invalid_argument("u_from_message: message length mismatch");
  BitVector frame = cfg.crc.enabled() ? crc_attach(message, cfg.crc) : message;
  return place_frame(cfg, frame);
}

}  // namespace polar
