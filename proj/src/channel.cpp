#include "polar/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "polar/gauss.hpp"
#include "polar/rng.hpp"

namespace polar {

ChannelParams ChannelParams::from_ebn0(double ebn0_db, double rate) {
  ChannelParams p;
  p.ebn0_db = ebn0_db;
  p.rate = rate;
  p.sigma = sigma_from_ebn0_db(ebn0_db, rate);
  return p;
}

std::vector<double> modulate(const BitVector& codeword) {
  require_bits(codeword, "modulate");
  std::vector<double> x(codeword.size());
  for (std::size_t i = 0; i < codeword.size(); ++i) x[i] = 1.0 - 2.0 * codeword[i];
  return x;
}

std::vector<double> transmit(const std::vector<double>& x, const ChannelParams& params,
                             std::uint64_t seed) {
  if (!(params.sigma > 0.0)) throw std::invalid_argument("transmit: sigma must be > 0");
  auto eng = make_engine(seed);
  std::normal_distribution<double> noise(0.0, params.sigma);
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + noise(eng);
  return y;
}

std::vector<double> channel_llrs(const std::vector<double>& y, const ChannelParams& params) {
  if (!(params.sigma > 0.0)) throw std::invalid_argument("channel_llrs: sigma must be > 0");
  double scale = 2.0 / (params.sigma * params.sigma);
  std::vector<double> llr(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) llr[i] = scale * y[i];
  return llr;
}

}  // namespace polar
