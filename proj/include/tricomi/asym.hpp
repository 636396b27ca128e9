#pragma once

// Leading-order uniform asymptotics of the rescaled monic polynomials
// pi_n(z / sqrt(n)): region classification in the closed first quadrant,
// one evaluator per region, and a full-plane dispatcher built on the parity
// and conjugation symmetries.

#include <string>

#include "tricomi/mpnum.hpp"

namespace tricomi::asym {

using mp::Complex;
using mp::LogComplex;
using mp::Precision;
using mp::Real;

enum class Region { Origin, A, B, C, D };

/// "Origin", "A", "B", "C", "D".
const char* region_name(Region r);

/// Region geometry: the strip half-width delta around the real axis and the
/// disk radius epsilon around 0 and 2 (epsilon < delta).
struct Params {
  double delta = 0.25;
  double epsilon = 0.15;

  /// Throws ConfigError unless 0 < epsilon < delta.
  void validate() const;
};

/// Reflections applied to bring z into the closed first quadrant.
struct QuadrantMap {
  bool negated = false;     // z -> -z (parity)
  bool conjugated = false;  // z -> conj z (Schwarz)
};

struct RegionLabel {
  Region tag;
  QuadrantMap quadrant_map;
};

struct AsymResult {
  LogComplex value;
  RegionLabel region;
  /// Natural log of the largest dropped remainder relative to the returned
  /// value: -log n for a bare (1 + O(1/n)) factor, larger where an additive
  /// remainder (regions B and D) is stated.
  Real dropped_term_bound;
  /// Log of the largest summand of the formula (log |value| for the
  /// single-term regions). The value is near a zero when it falls well below.
  Real log_envelope;
  /// The two-term sum cancelled below 2^(-bits/2) of its larger term.
  bool cancellation = false;
  /// Region D: n Re phi(z) > -log n, i.e. the additive O(e^(n Re phi))
  /// remainder is not below the 1/n level.
  bool dropped_term_dominant = false;
  /// Real-axis evaluation whose conjugate-pair sum was not real to 1e-8.
  bool imag_residual = false;

  /// Space-separated flag names ("cancellation", "dropped_term_dominant",
  /// "imag_residual"), or an empty string.
  std::string flags() const;
};

/// Classifies a point of the closed first quadrant, first match in the order
/// Origin (|z| < eps), C (|z - 2| <= eps), B (Im z <= delta, eps <= Re z <= 2 - eps),
/// D (Im z <= delta, 2 + eps <= Re z <= k_n), A otherwise; k_n = sqrt(n/alpha) + delta.
Region classify_region(long n, const Real& alpha, const Complex& z, const Params& params);

/// Reflects z into the closed first quadrant and classifies it.
RegionLabel classify(long n, const Real& alpha, const Complex& z, const Params& params);

// The evaluators use the upper-half-plane forms of the expansions: z must have
// Im z >= 0 (real z gives the boundary value from above). eval_C accepts
// either half-plane within its disk.

/// Outside region: prefactor * D(z)^-1 (z^2-4)^(-1/4) ((z+w)/2)^(2 alpha - 1/2) e^(-n phi - alpha pi i + pi i / 2).
AsymResult eval_A(long n, const Real& alpha, const Complex& z);
/// Band strip: the two-term oscillatory form, summed with a cancellation guard.
AsymResult eval_B(long n, const Real& alpha, const Complex& z);
/// Airy disk around 2, through the turning-point coordinate t = acosh(z/2)
/// so the removable singularities at z = 2 cancel analytically.
AsymResult eval_C(long n, const Real& alpha, const Complex& z);
/// Saturated strip: the leading term; the O(e^(n Re phi)) remainder is only
/// recorded in dropped_term_bound.
AsymResult eval_D(long n, const Real& alpha, const Complex& z);
/// Disk around the origin (z != 0).
AsymResult eval_origin(long n, const Real& alpha, const Complex& z);

/// The two bracket factors of the Airy-region formula,
///   a = [v^p - v^-p] (z^2-4)^(-1/4) f_n(z)^(-1/4),
///   b = [v^p + v^-p] (z^2-4)^(-1/4) f_n(z)^(1/4),
/// with v = (z + sqrt(z^2-4))/2, p = 2 alpha - 1/2 and f_n the turning-point
/// map. Evaluated as even functions of t = acosh(z/2), so z = 2 gives the
/// limits a = sqrt(2) p n^(-1/6), b = sqrt(2) n^(1/6). Requires |z - 2| < 1/2.
struct AiryBrackets {
  Complex a;
  Complex b;
};

AiryBrackets airy_brackets(long n, const Real& alpha, const Complex& z);

/// Dispatch through the region of z: evaluate at the first-quadrant
/// representative, then undo the reflections exactly (half-turn count for
/// the sign, field negation for the conjugate).
AsymResult eval_asym(long n, const Real& alpha, const Complex& z, const Params& params = {});

/// Evaluate with an explicitly chosen region formula at the first-quadrant
/// representative of z, bypassing the classifier (used for cross-region
/// comparisons on shared boundaries).
AsymResult eval_in_region(Region r, long n, const Real& alpha, const Complex& z);

}  // namespace tricomi::asym
