// Independent reference implementations used to pin expected test values.
// Everything here is deliberately written against different machinery than
// the library: dense GF(2) matrices, Romberg integration on the defining
// integral forms, plain bisection, exhaustive enumeration.
#pragma once

#include <cstdint>
#include <vector>

#include "polar/bits.hpp"
#include "polar/code.hpp"

namespace oracle {

using polar::BitVector;
using Mat = std::vector<std::vector<std::uint8_t>>;

Mat identity(int n);
Mat kron(const Mat& a, const Mat& b);
Mat mat_mul(const Mat& a, const Mat& b);
// B_N * G2^{tensor n} built from explicit Kronecker products and the explicit
// bit-reversal permutation matrix.
Mat polar_transform_matrix(int n);
BitVector vec_mat(const BitVector& u, const Mat& a);  // row vector times matrix

// phi on its defining form 1 - E[tanh(u/2)], u ~ N(x, 2x), via Romberg.
double phi_defining_integral(double x);
double phi_inv_bisect(double y);
// Gaussian tail by direct Romberg integration of the density.
double q_integral(double x);

double binom(int n, int k);
// P(odd number of successes among M Bernoulli(p))
double odd_parity_prob(int M, double p);
// P(at least one success) = subblock block-error probability over a BSC(p)
double subblock_bler_binomial(int M, double p);
// sum_{i>=1} C(M, 2i) eps^{2i}  (Prop-2 style tail bound)
double even_weight_tail(int M, double eps);

// CRC remainder by polynomial long division over LSB-first coefficient
// arrays; returns the parity bits MSB-first (ready to append to the payload).
BitVector crc_remainder(const BitVector& payload, int degree, const std::vector<int>& taps);

// Exhaustive maximum-likelihood decoding for tiny codes: the info frame whose
// codeword maximizes sum_i (1 - 2 c_i) llr_i.
double codeword_score(const std::vector<double>& llrs, const BitVector& c);
BitVector ml_frame(const std::vector<double>& llrs, const polar::CodeConfig& cfg);

// BEC with genie-known prefix: 1-based u indices that stay ambiguous given an
// erasure pattern, for the full transform matrix a (rate-1 code).
std::vector<int> bec_ambiguous(const Mat& a, const std::vector<std::uint8_t>& erased);

}  // namespace oracle
