#pragma once

// Ground truth: the three-term recurrence
//   (n+1) f_{n+1}(x) = (n+alpha) x f_n(x) - f_{n-1}(x),  f_0 = 1, f_1 = alpha x,
// the leading coefficients, the discrete orthogonality measure and its
// weighted sums.

#include <cstdint>
#include <vector>

#include "tricomi/mpnum.hpp"

namespace tricomi::exact {

using mp::Complex;
using mp::LogComplex;
using mp::Precision;
using mp::Real;

/// Forward-recurrence carrier. The true pair is (f_prev, f_curr) * 2^scale_exp;
/// the mantissas are rescaled by exact powers of two whenever their size
/// leaves [2^-16, 2^16], which keeps them in [1/2, 2] after each rescale.
struct RecurrenceState {
  Complex f_prev;
  Complex f_curr;
  std::int64_t scale_exp = 0;

  /// Natural log of the extracted scale, scale_exp * ln 2.
  Real log_scale() const;
};

/// Runs the recurrence up to degree n; f_curr holds f_n, f_prev holds
/// f_{n-1} (zero for n = 0).
RecurrenceState run_recurrence(long n, const Real& alpha, const Complex& x);

/// f_n^(alpha)(x).
LogComplex eval_f(long n, const Real& alpha, const Complex& x, Precision prec);

/// log gamma_n = lgamma(n+alpha) - lgamma(alpha) - lgamma(n+1).
Real log_leading_coeff(long n, const Real& alpha);

/// pi_n(z / sqrt(n)) = f_n(z / sqrt(n)) / gamma_n.
LogComplex eval_monic_rescaled(long n, const Real& alpha, const Complex& z, Precision prec);

/// w_d(z) = (1/z^2)^(1/z^2 - 1 - alpha) e^(-1/z^2 + alpha) / Gamma(1/z^2 + 1 - alpha),
/// on the branch analytic off the imaginary axis and real on the real axis.
LogComplex weight_wd(const Real& alpha, const Complex& z, Precision prec);

struct NodeMass {
  long k;
  Real x;     // (k + alpha)^(-1/2)
  Real mass;  // (k + alpha)^(k-1) e^(-k) / k!
};

/// Log of the jump at +-x_k, computed without forming k!.
Real log_mass(long k, const Real& alpha);

std::vector<NodeMass> nodes_masses(const Real& alpha, long k_max);

struct OrthoSum {
  Real value;
  /// Rigorous bound on the omitted tail sum over k > k_max.
  Real tail_bound;
};

inline constexpr long kDefaultKMax = 1'000'000;

/// h_n = 2 e^alpha / ((n + alpha) n!).
Real h_norm(long n, const Real& alpha);

/// Truncated discrete inner product sum_{k <= k_max} mass_k [f_m f_n(x_k) + f_m f_n(-x_k)].
/// Partitioned over k with a fixed merge order, so the result does not depend
/// on the thread count.
OrthoSum ortho_sum(long m, long n, const Real& alpha, long k_max, Precision prec);

/// The full (max_deg+1)^2 Gram matrix in one pass over the nodes.
/// Entry [m][n] carries its own tail bound.
std::vector<std::vector<OrthoSum>> ortho_matrix(long max_deg, const Real& alpha, long k_max, Precision prec);

/// Plain ascending-k reference kept for testing the parallel kernel.
std::vector<std::vector<OrthoSum>> ortho_matrix_serial(long max_deg, const Real& alpha, long k_max, Precision prec);

/// Majorant g_n(|x|) >= |f_n(x)| (recurrence with all signs positive).
Real majorant(long n, const Real& alpha, const Real& abs_x);

}  // namespace tricomi::exact
