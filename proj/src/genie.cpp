#include "polar/genie.hpp"

#include "polar/crc.hpp"

namespace polar {

std::optional<int> genie_first_error(const ScTrace& trace, const BitVector& true_u) {
  if (trace.u_hat.size() != true_u.size())
    throw std::invalid_argument("genie_first_error: length mismatch");
  for (std::size_t i = 0; i < true_u.size(); ++i)
    if (trace.u_hat[i] != true_u[i]) return static_cast<int>(i) + 1;
  return std::nullopt;
}

DecodeOutcome genie_sc_decode(std::span<const double> channel_llrs, const CodeConfig& cfg,
                              const BitVector& true_u, int k) {
  if (k < 0) throw std::invalid_argument("genie_sc_decode: k must be >= 0");
  if (true_u.size() != static_cast<std::size_t>(cfg.block_length))
    throw std::invalid_argument("genie_sc_decode: true_u length != N");
  ScDecoder dec(cfg);
  dec.load(channel_llrs);
  const ScTrace* tr = &dec.decode();
  std::uint64_t visits = tr->visits;
  FlipSet flips;
  for (int used = 0; used < k; ++used) {
    auto err = genie_first_error(*tr, true_u);
    if (!err.has_value()) break;
    // The erroneous decision sits after all previous corrections, so the flip
    // set stays sorted and the engine restarts right at the new error.
    flips.positions.push_back(*err);
    tr = &dec.decode(flips);
    visits += tr->visits;
  }
  bool crc_ok = cfg.crc.enabled() && crc_check(extract_frame(cfg, tr->u_hat), cfg.crc);
  return DecodeOutcome{tr->u_hat, crc_ok, visits};
}

}  // namespace polar
