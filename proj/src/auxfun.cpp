#include "tricomi/auxfun.hpp"

#include <gmpxx.h>

#include <mutex>
#include <vector>

#include "tricomi/specfun.hpp"

namespace tricomi::aux {

namespace {

bool near_axis(const Complex& z) { return abs(z.im()).to_double() <= z.precision().cut_tolerance(); }

Complex on_axis(const Complex& z) { return Complex(z.re(), Real(z.precision())); }

Complex i_times(const Real& y) { return Complex(Real(y.precision()), y); }

// +1 on the upper side, -1 on the lower.
double side_sign(Side s) { return s == Side::Lower ? -1.0 : 1.0; }

// Side for a function with a cut along part of the real axis: `cut` says
// whether z lies on it (within tolerance), where an explicit side is
// required. Off the cut the side only matters on the axis itself.
Side cut_side(const Complex& z, Side side, bool cut, const char* what) {
  if (cut && side == Side::Infer) throw DomainError(std::string(what) + ": point on the branch cut; pass an explicit side");
  if (side != Side::Infer) return mp::resolve_side(z, side);
  if (near_axis(z)) return Side::Upper;
  return z.im().sign() > 0 ? Side::Upper : Side::Lower;
}

// log((z + w)/2) with w = sqrt(z^2 - 4), the boundary value of the given
// side on the real axis.
struct RootLog {
  Complex w;
  Complex t;
};

RootLog root_log(const Complex& z, Side s) {
  Complex w = mp::sqrt_zsq_minus4(z, s);
  Complex t = mp::log((z + w) / 2.0, s);
  return {w, t};
}

Real half_log_two_pi(Precision p) { return log(Real::pi(p) * 2.0) / 2.0; }

}  // namespace

Real psi_at_zero(Precision p) { return 1.0 / (Real::pi(p) * 3.0); }

Real density_psi(const Real& x, bool define_at_zero) {
  Precision p = x.precision();
  Real ax = abs(x);
  if (ax > 2.0) return 2.0 / (ax * ax * ax);
  if (ax.is_zero()) {
    if (!define_at_zero) throw DomainError("psi: x = 0 with the limit toggle off");
    return psi_at_zero(p);
  }
  Real pi = Real::pi(p);
  // Below 2^(-bits/4) the two branch terms cancel; the Taylor polynomial
  // 1/(3 pi) + x^2/(40 pi) is exact to O(x^4) there.
  if (ax.exponent() < -p.bits() / 4) return (1.0 / (Real(3.0, p)) + ax * ax / 40.0) / pi;
  Real x2 = ax * ax;
  Real r = sqrt(4.0 - x2);
  Real at = atan(ax / r);  // pi/2 at |x| = 2 (division gives +inf)
  return (at * 4.0 / (x2 * ax) - r / x2) / pi;
}

Complex g_prime(const Complex& z, Side side) {
  if (z.is_zero()) throw PoleError("g': z = 0");
  Side s = mp::resolve_side(z, side);
  Complex zs = near_axis(z) ? on_axis(z) : z;
  RootLog rl = root_log(zs, s);
  Complex z3 = zs * zs * zs;
  Real two_pi = Real::pi(z.precision()) * 2.0;
  Complex jump = i_times(two_pi * side_sign(s));
  return (rl.t * 4.0 - jump) / z3 + rl.w / (zs * zs);
}

Complex phi_tilde(const Complex& z, Side side) {
  Precision p = z.precision();
  double tol = p.cut_tolerance();
  bool axis = near_axis(z);
  if (axis && abs(z.re() - 2.0).to_double() <= tol) return Complex(p);
  bool cut = axis && z.re() < 2.0;
  Side s = cut_side(z, side, cut, "phi_tilde");
  Complex zs = axis ? on_axis(z) : z;
  RootLog rl = root_log(zs, s);
  // (2/z^2 - 1) log((z + w)/2) + w / (2z): the closed form with the log 2
  // terms folded in.
  Complex inv_z2 = 1.0 / (zs * zs);
  return (inv_z2 * 2.0 - 1.0) * rl.t + rl.w / (zs * 2.0);
}

PhiValue phi(const Complex& z, Side side) {
  if (z.is_zero()) throw PoleError("phi: z = 0");
  Side s = mp::resolve_side(z, side);
  Complex zs = near_axis(z) ? on_axis(z) : z;
  Real pi = Real::pi(z.precision());
  Complex conn = i_times(pi * side_sign(s)) / (zs * zs);
  return {phi_tilde(zs, s) - conn, s};
}

Complex phi_hat(const Complex& z, Side side) {
  if (z.is_zero()) throw PoleError("phi_hat: z = 0");
  Precision p = z.precision();
  bool axis = near_axis(z);
  Side s;
  if (axis && z.re() < -2.0 - p.cut_tolerance()) {
    s = side == Side::Infer ? Side::Upper : side;
  } else {
    s = cut_side(z, side, axis, "phi_hat");
  }
  Complex zs = axis ? on_axis(z) : z;
  PhiValue ph = phi(zs, s);
  Real pi = Real::pi(p);
  Complex conn = i_times(pi * side_sign(s)) * (1.0 / (zs * zs) - 1.0);
  return ph.value - conn;
}

// ------------------------------------------------------------ turning point

namespace {

// Taylor coefficients c_j of G(t) = sum_j c_j t^(2j), exact:
// c_j = -(3/2) (j+2) a_(j+2), with tanh t = sum_k a_k t^(2k-1),
// a_k = (-1)^(k-1) T_k / (2k-1)!.
std::vector<mpq_class> g_coefficients(std::size_t count) {
  static std::mutex mu;
  static std::vector<mpq_class> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() < count) {
    const auto tan_numbers = specfun::tangent_numbers(count + 2);
    mpz_class fact = 1;
    std::vector<mpz_class> odd_fact;  // (2k-1)!
    for (std::size_t k = 1; k <= count + 2; ++k) {
      if (k > 1) fact *= mpz_class(2 * k - 2) * mpz_class(2 * k - 1);
      odd_fact.push_back(fact);
    }
    cache.clear();
    for (std::size_t j = 0; j < count; ++j) {
      std::size_t k = j + 2;
      mpq_class a(tan_numbers[k - 1], odd_fact[k - 1]);
      a.canonicalize();
      if (k % 2 == 0) a = -a;
      mpq_class c = mpq_class(-3, 2) * mpq_class(static_cast<long>(k)) * a;
      cache.push_back(c);
    }
  }
  // A copy: the cache may be rebuilt by another thread once the lock drops.
  return std::vector<mpq_class>(cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count));
}

Real from_rational(const mpq_class& q, Precision p) {
  Real r(p);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace

TurningPointMap turning_point_map(const Complex& z) {
  Precision p = z.precision();
  if (abs(z - 2.0).to_double() >= kTurningDiskRadius) throw DomainError("turning-point map: |z - 2| >= 1/2");
  // t = acosh(1 + u) = log1p(u + sqrt(u (u + 2))), u = z/2 - 1.
  Complex u = z / 2.0 - 1.0;
  Complex root = mp::sqrt(u, Side::Upper) * mp::sqrt(u + 2.0, Side::Upper);
  Complex t = u.is_zero() ? Complex(p) : mp::log1p(u + root, Side::Upper);
  Complex t2 = t * t;
  Complex g(p);
  if (abs(t).to_double() < 0.5) {
    // |t|^2 < 1/4 against a radius of convergence pi^2/4: each term gains
    // more than 3.3 bits.
    std::size_t terms = static_cast<std::size_t>(p.bits() / 3 + 8);
    const auto& c = g_coefficients(terms);
    for (std::size_t j = terms; j-- > 0;) g = g * t2 + from_rational(c[j], p);
  } else {
    Complex ch = mp::cosh(t);
    Complex f = (t - mp::tanh(t) / 2.0 - t / (ch * ch * 2.0)) * 1.5;
    g = f / (t2 * t);
  }
  return {t, t2, g};
}

Complex f_tilde_n(long n, const Complex& z) {
  Precision p = z.precision();
  TurningPointMap m = turning_point_map(z);
  Real n23 = pow(Real(n, p), Real(2.0, p) / 3.0);
  Complex g23 = mp::exp(mp::log(m.g, Side::Upper) * (Real(2.0, p) / 3.0));
  return m.t_sq * g23 * n23;
}

// ------------------------------------------------------------ D-functions

LogComplex d_func(long n, const Real& alpha, const Complex& z, Side side) {
  if (z.is_zero()) throw PoleError("D: z = 0");
  Precision p = z.precision();
  Side s = mp::resolve_side(z, side);
  Complex zs = near_axis(z) ? on_axis(z) : z;
  Real a(alpha, p);
  Real nr(n, p);
  Complex u = Complex(nr) / (zs * zs);
  // log(-n/z^2) = log n - 2 Log z +- pi i on C+-.
  Complex log_mu = Complex(log(nr)) - mp::log(zs, s) * 2.0 + i_times(Real::pi(p) * side_sign(s));
  LogComplex lg = specfun::log_gamma_complex(a - u, p);
  Complex expo = lg.log_value() - u - half_log_two_pi(p) + (u - a + 0.5) * log_mu;
  return LogComplex::from_log(expo);
}

namespace {

LogComplex d_common(long n, const Real& alpha, const Complex& z, const Complex& log_base) {
  Precision p = z.precision();
  Real a(alpha, p);
  Complex u = Complex(Real(n, p)) / (z * z);
  LogComplex lg = specfun::log_gamma_complex(u + 1.0 - a, p);
  Complex expo = Complex(half_log_two_pi(p)) - lg.log_value() - u + (u - a + 0.5) * log_base;
  return LogComplex::from_log(expo);
}

}  // namespace

LogComplex d_tilde(long n, const Real& alpha, const Complex& z) {
  if (near_axis(z) && z.re() <= 0.0) throw DomainError("D-tilde: z on (-inf, 0]");
  Precision p = z.precision();
  Complex zs = near_axis(z) ? on_axis(z) : z;
  Complex log_base = Complex(log(Real(n, p))) - mp::log(zs) * 2.0;
  return d_common(n, alpha, zs, log_base);
}

LogComplex d_hat(long n, const Real& alpha, const Complex& z) {
  if (near_axis(z) && z.re() >= 0.0) throw DomainError("D-hat: z on [0, inf)");
  Precision p = z.precision();
  Complex zs = near_axis(z) ? on_axis(z) : z;
  Complex log_base = Complex(log(Real(n, p))) - mp::log(-zs) * 2.0;
  return d_common(n, alpha, zs, log_base);
}

DTriple d_triple(long n, const Real& alpha, const Complex& z, Side side) {
  return {d_func(n, alpha, z, side), d_tilde(n, alpha, z), d_hat(n, alpha, z)};
}

// ------------------------------------------------------------ E-family

namespace {

LogComplex e_common(const Real& alpha, const Complex& a, const Complex& b) {
  Precision p = a.precision();
  Real al(alpha, p);
  Real pw = 0.5 - al;
  LogComplex lg = specfun::log_gamma_complex(Complex(al), p);
  Complex expo = Complex(half_log_two_pi(p)) - lg.log_value() + (mp::log(a, Side::Upper) + mp::log(b, Side::Upper)) * pw;
  return LogComplex::from_log(expo);
}

}  // namespace

LogComplex e_func(const Real& alpha, const Complex& z) {
  if (near_axis(z) && abs(z.re()) >= 2.0 - z.precision().cut_tolerance()) throw DomainError("E: z on (-inf, -2] u [2, inf)");
  Complex zs = near_axis(z) ? on_axis(z) : z;
  return e_common(alpha, 2.0 - zs, zs + 2.0);
}

LogComplex e_tilde(const Real& alpha, const Complex& z) {
  if (near_axis(z) && z.re() <= 2.0 + z.precision().cut_tolerance()) throw DomainError("E-tilde: z on (-inf, 2]");
  Complex zs = near_axis(z) ? on_axis(z) : z;
  return e_common(alpha, zs - 2.0, zs + 2.0);
}

LogComplex e_hat(const Real& alpha, const Complex& z) {
  if (near_axis(z) && z.re() >= -2.0 - z.precision().cut_tolerance()) throw DomainError("E-hat: z on [-2, inf)");
  Complex zs = near_axis(z) ? on_axis(z) : z;
  return e_common(alpha, -zs - 2.0, 2.0 - zs);
}

EFamily e_family(const Real& alpha, const Complex& z) {
  if (near_axis(z)) throw DomainError("E-family: z on the real axis");
  return {e_func(alpha, z), e_tilde(alpha, z), e_hat(alpha, z)};
}

// ------------------------------------------------------------ theta, gamma, Pi

ThetaGammaPi theta_gamma_pi(long n, const Real& alpha, const Complex& z) {
  if (z.is_zero()) throw PoleError("theta: z = 0");
  Precision p = z.precision();
  Real pi = Real::pi(p);
  Real npi = pi * Real(n, p);
  Complex z2 = z * z;
  Complex theta = Complex(npi) / z2 - Complex(pi * Real(alpha, p));
  Complex gamma_z = Complex(-(npi * 2.0)) / (z2 * z);
  return {theta, gamma_z, mp::sin(theta) / gamma_z};
}

Complex varphi(const Complex& z, Side side) {
  Complex w = mp::sqrt_zsq_minus4(z * 2.0, side);
  return z + w / 2.0;
}

}  // namespace tricomi::aux
