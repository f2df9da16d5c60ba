#pragma once

#include <vector>

namespace polar {

// Mean LLRs of the split channels of a BI-AWGN channel under the Gaussian
// approximation of density evolution. means[i] (0-based) is the mean for
// split channel i+1, i.e. the decision LLR of u_{i+1} when all-zero is sent.
struct GaProfile {
  double channel_mu = 0.0;
  std::vector<double> means;
};

// phi(x) = 1 - (1/sqrt(4*pi*x)) * Int tanh(u/2) exp(-(u-x)^2/(4x)) du, phi(0) = 1.
// Evaluated through the equivalent positive-integrand form
//   phi(x) = exp(-x/4)/sqrt(4*pi*x) * Int sech(u/2) exp(-u^2/(4x)) du
// by adaptive quadrature, which stays accurate for large x where the defining
// form cancels catastrophically.
double phi(double x);

// log(phi(x)); usable far beyond the underflow point of phi itself.
double phi_log(double x);

// Inverse of phi on (0, 1]; root-bracketing search on [1e-12, 200], absolute
// tolerance 1e-10. Arguments below phi(200) clamp to 200.
double phi_inv(double y);

// Unbounded-domain inverse on log scale: returns x with phi_log(x) = log_y.
double phi_inv_log(double log_y);

// Gaussian tail Q(x) = P(N(0,1) > x).
double q_func(double x);

double sigma_from_ebn0_db(double ebn0_db, double rate);
double channel_mu_from_ebn0_db(double ebn0_db, double rate);

// Full GA recursion over n polarization steps: mu^- = phi_inv(1-(1-phi(mu))^2)
// applied on even branches, mu^+ = 2*mu on odd branches, run in the log-phi
// domain so deep recursions neither underflow nor saturate.
GaProfile split_channel_means(int n, double channel_mu);

// Mean decision LLR of the first bit of a rate-1 subblock of size 2^m whose
// symbols all see mean LLR mu: phi_inv(1 - (1 - phi(mu))^(2^m)).
double first_bit_mean(double mu, int m);

// Block and first-bit error probabilities of such a subblock.
struct SubblockProbs {
  double block;      // 1 - (1 - Q(sqrt(mu/2)))^(2^m)
  double first_bit;  // Q(sqrt(first_bit_mean(mu, m)/2))
};
SubblockProbs subblock_probs(double mu, int m);

}  // namespace polar
