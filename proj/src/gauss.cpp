#include "polar/gauss.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polar {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double sech_half(double u) {
  double e = std::exp(-std::abs(u) * 0.5);
  return 2.0 * e / (1.0 + e * e);
}

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_step(const F& f, double a, double m, double b, double fa, double fm, double fb,
                     double whole, double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(a, m, fa, flm, fm);
  double right = simpson(m, b, fm, frm, fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_step(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Adaptive Simpson with tolerance relative to a coarse first estimate.
template <typename F>
double integrate(const F& f, double a, double b, double rel_tol) {
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = simpson(a, b, fa, fm, fb);
  double scale = std::max(std::abs(whole), 1e-300);
  return adaptive_step(f, a, m, b, fa, fm, fb, whole, scale * rel_tol, 48);
}

}  // namespace

double phi_log(double x) {
  if (x < 0.0 || !std::isfinite(x)) throw std::domain_error("phi: argument must be >= 0");
  if (x == 0.0) return 0.0;
  // Integrate sech(u/2) exp(-u^2/(4x)) over u >= 0 (both factors <= 1, no
  // cancellation); the sech factor kills the tail past ~75, the Gaussian
  // factor past ~55*sqrt(x).
  double upper = std::min(80.0, 55.0 * std::sqrt(x));
  auto f = [x](double u) { return sech_half(u) * std::exp(-u * u / (4.0 * x)); };
  double j = 2.0 * integrate(f, 0.0, upper, 1e-12);
  return -x / 4.0 - 0.5 * std::log(4.0 * kPi * x) + std::log(j);
}

double phi(double x) {
  if (x == 0.0) return 1.0;
  return std::exp(phi_log(x));
}

double phi_inv_log(double log_y) {
  if (log_y > 0.0) throw std::domain_error("phi_inv: argument must be in (0, 1]");
  if (log_y == 0.0) return 0.0;
  double lo = 1e-12, hi = 200.0;
  if (phi_log(lo) <= log_y) return lo;
  while (phi_log(hi) > log_y) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) throw std::domain_error("phi_inv: argument out of reach");
  }
  // Bisection to a safe bracket, then secant refinement on phi_log.
  double flo = phi_log(lo) - log_y, fhi = phi_log(hi) - log_y;
  for (int i = 0; i < 30 && hi - lo > 1e-12; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = phi_log(mid) - log_y;
    if (fm >= 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  for (int i = 0; i < 40 && hi - lo > 1e-10; ++i) {
    double denom = fhi - flo;
    double mid = (std::abs(denom) > 0.0) ? lo + flo * (lo - hi) / denom : 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
    double fm = phi_log(mid) - log_y;
    if (fm >= 0.0) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

double phi_inv(double y) {
  if (!(y > 0.0) || y > 1.0) throw std::domain_error("phi_inv: argument must be in (0, 1]");
  if (y == 1.0) return 0.0;
  double log_y = std::log(y);
  if (phi_log(200.0) >= log_y) return 200.0;  // below the bracket floor: clamp
  return phi_inv_log(log_y);
}

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double sigma_from_ebn0_db(double ebn0_db, double rate) {
  if (!(rate > 0.0) || !std::isfinite(ebn0_db))
    throw std::invalid_argument("sigma_from_ebn0_db: need finite Eb/N0 and rate > 0");
  return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
}

double channel_mu_from_ebn0_db(double ebn0_db, double rate) {
  double sigma = sigma_from_ebn0_db(ebn0_db, rate);
  return 2.0 / (sigma * sigma);
}

namespace {

// log(1 - e^z) for z <= 0.
double log1mexp(double z) {
  if (z >= 0.0) return -std::numeric_limits<double>::infinity();
  if (z > -0.6931471805599453) return std::log(-std::expm1(z));
  return std::log1p(-std::exp(z));
}

// mu^- = phi_inv(1 - (1 - phi(mu))^2) carried out on log(phi) values.
double mu_minus(double mu) {
  if (mu == 0.0) return 0.0;
  double lp = phi_log(mu);
  double lq;  // log(p (2 - p)) = log(1 - (1 - p)^2)
  if (lp > -37.0) {
    double em = std::expm1(lp);  // -(1 - p), exact for p near 1
    lq = std::log1p(-em * em);
  } else {
    lq = lp + std::log(2.0 - std::exp(lp));  // p below 1e-16: 1-(1-p)^2 ~ 2p
  }
  if (lq >= 0.0) return 0.0;
  return phi_inv_log(lq);
}

}  // namespace

GaProfile split_channel_means(int n, double channel_mu) {
  if (n < 1 || n > 30) throw std::invalid_argument("split_channel_means: n out of range");
  if (!(channel_mu > 0.0) || !std::isfinite(channel_mu))
    throw std::domain_error("split_channel_means: channel_mu must be > 0");
  std::vector<double> cur{channel_mu};
  for (int level = 0; level < n; ++level) {
    std::vector<double> next(cur.size() * 2);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[2 * j] = mu_minus(cur[j]);
      next[2 * j + 1] = 2.0 * cur[j];
    }
    cur.swap(next);
  }
  return GaProfile{channel_mu, std::move(cur)};
}

double first_bit_mean(double mu, int m) {
  if (m < 0 || m > 30) throw std::invalid_argument("first_bit_mean: m out of range");
  if (!(mu >= 0.0)) throw std::domain_error("first_bit_mean: mu must be >= 0");
  if (m == 0 || mu == 0.0) return mu;
  double big_m = std::ldexp(1.0, m);
  double lp = phi_log(mu);
  double ly;  // log(1 - (1 - phi(mu))^M)
  if (lp > -37.0) {
    double l1mp = log1mexp(lp);  // log(1 - phi(mu))
    if (std::isinf(l1mp)) return 0.0;
    ly = log1mexp(big_m * l1mp);
  } else {
    ly = lp + m * 0.6931471805599453;  // phi(mu) below 1e-16: y ~ M phi(mu)
  }
  if (ly >= 0.0) return 0.0;
  return phi_inv_log(ly);
}

SubblockProbs subblock_probs(double mu, int m) {
  if (m < 0 || m > 30) throw std::invalid_argument("subblock_probs: m out of range");
  if (!(mu >= 0.0)) throw std::domain_error("subblock_probs: mu must be >= 0");
  double q = q_func(std::sqrt(mu / 2.0));
  if (m == 0) return SubblockProbs{q, q};
  double big_m = std::ldexp(1.0, m);
  double block = -std::expm1(big_m * std::log1p(-q));
  double first = q_func(std::sqrt(first_bit_mean(mu, m) / 2.0));
  return SubblockProbs{block, first};
}

}  // namespace polar
