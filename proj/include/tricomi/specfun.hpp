#pragma once

// Complex Airy functions and the principal complex log-Gamma at arbitrary
// precision.

#include <gmpxx.h>

#include <vector>

#include "tricomi/mpnum.hpp"

namespace tricomi::specfun {

using mp::Complex;
using mp::LogComplex;
using mp::Precision;
using mp::Real;

/// Ai, Bi and their derivatives at one argument.
struct AiryQuartet {
  Complex ai;
  Complex bi;
  Complex ai_d;
  Complex bi_d;
};

/// Radius beyond which the asymptotic expansions replace the Maclaurin
/// series. Grows like bits^(2/3), which keeps the optimally truncated
/// expansion below 2^-bits.
double airy_crossover_radius(Precision prec);

/// All four Airy functions; Maclaurin series for |z| <= R0, asymptotic
/// expansions with the three-sector connection scheme beyond.
AiryQuartet airy_quartet(const Complex& z, Precision prec);

/// The two evaluation routes, exposed so the crossover can be tested.
AiryQuartet airy_series(const Complex& z, Precision prec);
AiryQuartet airy_asymptotic(const Complex& z, Precision prec);

/// Principal log Gamma (continuous on C minus (-inf, 0]) as a LogComplex:
/// log_mod = Re log Gamma, phase = Im log Gamma. On the negative real axis
/// the phase is 0 or pi according to the sign of Gamma.
///
/// Shifts upward until Re z >= 10 + bits/8 before the Stirling sum and uses
/// reflection for Re z < 1/2.
LogComplex log_gamma_complex(const Complex& z, Precision prec);

/// Tangent numbers T_1..T_n (tan x = sum T_k x^(2k-1)/(2k-1)!), exact.
/// Shared source for the Bernoulli numbers and the tanh Taylor series.
std::vector<mpz_class> tangent_numbers(std::size_t n);

/// B_{2k} for k >= 1, exact.
mpq_class bernoulli_2k(std::size_t k);

}  // namespace tricomi::specfun
