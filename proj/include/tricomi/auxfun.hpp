#pragma once

// Auxiliary functions of the uniform asymptotics: the equilibrium density,
// the g-function derivative, the phase functions phi / phi-tilde / phi-hat,
// the turning-point map, the Gamma-ratio D-functions, the algebraic
// E-prefactors, theta / gamma / Pi, and the exterior conformal map varphi.
//
// Functions stated separately on the upper and lower half-planes take an
// explicit Side. Side::Infer reads it from sign(Im z) and rejects points
// within the cut tolerance of the real axis; Upper / Lower select the
// boundary value from that half-plane.

#include "tricomi/mpnum.hpp"

namespace tricomi::aux {

using mp::Complex;
using mp::LogComplex;
using mp::Precision;
using mp::Real;
using mp::Side;

/// Equilibrium density
///   psi(x) = (4 arctan(|x| / sqrt(4 - x^2)) / |x|^3 - sqrt(4 - x^2) / x^2) / pi,  |x| <= 2,
///   psi(x) = 2 / |x|^3,                                                          |x| > 2.
/// The band branch has a removable singularity at 0 with limit 1/(3 pi);
/// with define_at_zero = false, x = 0 is a DomainError instead.
Real density_psi(const Real& x, bool define_at_zero = true);

/// The limit psi(0+) = 1 / (3 pi).
Real psi_at_zero(Precision p);

/// g'(z) = 4 log(z + w) / z^3 + w / z^2 - 4 log 2 / z^3 -+ 2 pi i / z^3 on C+-,
/// w = sqrt(z^2 - 4).
Complex g_prime(const Complex& z, Side side = Side::Infer);

/// Closed form of phi-tilde on C \ (-inf, 2]:
///   (2/z^2) L - L + (1 - 2/z^2) log 2 + w / (2z),  L = log(z + w).
/// On (-inf, 2) an explicit side returns the one-sided limit; z = 2 returns
/// the limit 0.
Complex phi_tilde(const Complex& z, Side side = Side::Infer);

struct PhiValue {
  Complex value;
  Side half_plane;  // Upper or Lower: which sign of the connection term was used
};

/// phi(z) = phi_tilde(z) -+ pi i / z^2 on C+-.
PhiValue phi(const Complex& z, Side side = Side::Infer);

/// phi_hat(z) = phi(z) -+ (1/z^2 - 1) pi i on C+-, analytic on C \ [-2, inf).
/// On (-inf, -2) both half-plane expressions agree; the upper one is used.
Complex phi_hat(const Complex& z, Side side = Side::Infer);

/// Radius of the disk around z = 2 on which the turning-point map is offered.
inline constexpr double kTurningDiskRadius = 0.5;

/// Turning-point coordinates for z near 2: t = acosh(z/2) (so z = 2 cosh t,
/// sqrt(z^2 - 4) = 2 sinh t, -(3/2) phi_tilde = F(t) with
/// F(t) = (3/2)(t - tanh(t)/2 - t sech^2(t) / 2)), and G = F(t) / t^3, an even
/// analytic function of t with G(0) = 1. Every quantity built from these is
/// even in t, so the sign of t is immaterial; t^2 is analytic in z.
struct TurningPointMap {
  Complex t;
  Complex t_sq;
  Complex g;  // F(t) / t^3, from its Taylor series in t^2 when |t| < 1/2
};

TurningPointMap turning_point_map(const Complex& z);

/// f_tilde_n(z) = (-(3/2) n phi_tilde(z))^(2/3) = n^(2/3) t^2 G^(2/3),
/// analytic in |z - 2| < 1/2 and positive for real z > 2.
Complex f_tilde_n(long n, const Complex& z);

/// Log forms of D, D-tilde and D-hat (u = n / z^2):
///   D       = Gamma(alpha - u) e^-u (-u)^(u - alpha + 1/2) / sqrt(2 pi),  -1/z^2 = e^(+-pi i)/z^2 on C+-,
///   D-tilde = sqrt(2 pi) (u)^(u - alpha + 1/2) / (Gamma(1 + u - alpha) e^u),  arg z in (-pi, pi),
///   D-hat   = sqrt(2 pi) (n/(-z)^2)^(u - alpha + 1/2) / (Gamma(1 + u - alpha) e^u),  arg(-z) in (-pi, pi).
LogComplex d_func(long n, const Real& alpha, const Complex& z, Side side = Side::Infer);
LogComplex d_tilde(long n, const Real& alpha, const Complex& z);
LogComplex d_hat(long n, const Real& alpha, const Complex& z);

struct DTriple {
  LogComplex d;
  LogComplex d_tilde;
  LogComplex d_hat;
};

DTriple d_triple(long n, const Real& alpha, const Complex& z, Side side = Side::Infer);

/// E       = sqrt(2 pi)/Gamma(alpha) (2 - z)^p (z + 2)^p,     cut (-inf,-2] u [2, inf),
/// E-tilde = sqrt(2 pi)/Gamma(alpha) (z - 2)^p (z + 2)^p,     cut (-inf, 2],
/// E-hat   = sqrt(2 pi)/Gamma(alpha) (-z - 2)^p (2 - z)^p,    cut [-2, inf),
/// with p = 1/2 - alpha and principal powers throughout.
LogComplex e_func(const Real& alpha, const Complex& z);
LogComplex e_tilde(const Real& alpha, const Complex& z);
LogComplex e_hat(const Real& alpha, const Complex& z);

struct EFamily {
  LogComplex e;
  LogComplex e_tilde;
  LogComplex e_hat;
};

/// All three at once; their cuts together cover the real axis, so z must be
/// off it (DomainError otherwise).
EFamily e_family(const Real& alpha, const Complex& z);

struct ThetaGammaPi {
  Complex theta;    // n pi / z^2 - pi alpha
  Complex gamma_z;  // -2 n pi / z^3
  Complex pi_z;     // sin(theta) / gamma_z
};

ThetaGammaPi theta_gamma_pi(long n, const Real& alpha, const Complex& z);

/// varphi(z) = z + sqrt(z^2 - 1), cut [-1, 1], ~ 2z at infinity.
Complex varphi(const Complex& z, Side side = Side::Infer);

}  // namespace tricomi::aux
