#include "tricomi/asym.hpp"

#include <cmath>

#include "tricomi/auxfun.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::asym {

using mp::Side;

const char* region_name(Region r) {
  switch (r) {
    case Region::Origin: return "Origin";
    case Region::A: return "A";
    case Region::B: return "B";
    case Region::C: return "C";
    case Region::D: return "D";
  }
  return "?";
}

void Params::validate() const {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(epsilon < delta)) throw ConfigError("epsilon must be smaller than delta");
}

std::string AsymResult::flags() const {
  std::string s;
  auto put = [&s](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ' ';
    s += name;
  };
  put(cancellation, "cancellation");
  put(dropped_term_dominant, "dropped_term_dominant");
  put(imag_residual, "imag_residual");
  return s;
}

namespace {

// Reduction to the closed first quadrant; mirrors exact::eval_f.
QuadrantMap quadrant_of(const Complex& z) {
  QuadrantMap q;
  q.negated = z.re().sign() < 0 || (z.re().sign() == 0 && z.im().sign() < 0);
  Real im = q.negated ? -z.im() : z.im();
  q.conjugated = im.sign() < 0;
  return q;
}

Complex reduce(const Complex& z, const QuadrantMap& q) {
  Complex r = q.negated ? -z : z;
  return q.conjugated ? mp::conj(r) : r;
}

bool near_axis(const Complex& z) { return abs(z.im()).to_double() <= z.precision().cut_tolerance(); }

// Upper-half-plane evaluation point: real-axis points are snapped onto the
// axis (boundary value from above); clearly lower points are rejected.
Complex upper_point(const Complex& z, const char* what) {
  if (near_axis(z)) return Complex(z.re(), Real(z.precision()));
  if (z.im().sign() < 0) throw DomainError(std::string(what) + ": formula stated for Im z >= 0");
  return z;
}

Complex i_real(const Real& y) { return Complex(Real(y.precision()), y); }

// Pieces shared by the outer formulas, all at the upper side.
struct Common {
  Complex w;        // sqrt(z^2 - 4)
  Complex log_vp;   // log((z + w)/2)
  Complex quarter;  // -(1/4) log(z^2 - 4), as -(log(z-2) + log(z+2))/4
  Complex phi;      // phi(z), upper form
  Real p;           // 2 alpha - 1/2
};

Common common_pieces(const Real& alpha, const Complex& z) {
  Complex w = mp::sqrt_zsq_minus4(z, Side::Upper);
  Complex lvp = mp::log((z + w) / 2.0, Side::Upper);
  Complex quarter = (mp::log(z - 2.0, Side::Upper) + mp::log(z + 2.0, Side::Upper)) / -4.0;
  Complex ph = aux::phi(z, Side::Upper).value;
  return {w, lvp, quarter, ph, alpha * 2.0 - 0.5};
}

// log of Gamma(alpha) e^(n/2) / (c n^(n/2 + alpha - 1/2)) with c = sqrt(2 pi)
// or sqrt(2).
Real prefactor(long n, const Real& alpha, bool two_pi) {
  Precision p = alpha.precision();
  Real nr(n, p);
  Real c = two_pi ? log(Real::pi(p) * 2.0) / 2.0 : Real::ln2(p) / 2.0;
  return lngamma(alpha) + nr / 2.0 - c - (nr / 2.0 + alpha - 0.5) * log(nr);
}

Real minus_log_n(long n, Precision p) { return -log(Real(n, p)); }

// On the real axis the conjugate-pair sums are real: check it, then drop
// the rounding-level imaginary part so the result is exactly real.
LogComplex realify(const LogComplex& v, bool& residual) {
  if (v.is_zero()) return v;
  Precision p = v.precision();
  Real ph = v.reduced_phase();
  Real pi = Real::pi(p);
  Real dist = min(abs(ph), abs(pi - abs(ph)));
  if (dist.to_double() > 1e-8) {
    residual = true;
    return v;
  }
  bool negative = abs(ph) > pi / 2.0;
  return LogComplex(v.log_mod(), Real(p), negative ? 1 : 0);
}

AsymResult make(const LogComplex& v, Region r, Real dropped) {
  return AsymResult{v, RegionLabel{r, {}}, std::move(dropped), v.log_mod()};
}

}  // namespace

Region classify_region(long n, const Real& alpha, const Complex& z, const Params& params) {
  params.validate();
  Precision p = z.precision();
  Real eps(params.epsilon, p), delta(params.delta, p);
  const Real& x = z.re();
  const Real& y = z.im();
  if (mp::norm(z) < eps * eps) return Region::Origin;
  if (mp::norm(z - 2.0) <= eps * eps) return Region::C;
  if (y <= delta && x >= eps && x <= 2.0 - eps) return Region::B;
  Real k_n = sqrt(Real(n, p) / Real(alpha, p)) + delta;
  if (y <= delta && x >= eps + 2.0 && x <= k_n) return Region::D;
  return Region::A;
}

RegionLabel classify(long n, const Real& alpha, const Complex& z, const Params& params) {
  QuadrantMap q = quadrant_of(z);
  return {classify_region(n, alpha, reduce(z, q), params), q};
}

AsymResult eval_A(long n, const Real& alpha, const Complex& z_in) {
  Complex z = upper_point(z_in, "eval_A");
  if (z.is_zero()) throw DomainError("eval_A: z = 0");
  Precision p = z.precision();
  Real a(alpha, p);
  Common c = common_pieces(a, z);
  Real pi = Real::pi(p);
  // 1/D vanishes where Gamma(alpha - n/z^2) has a pole: on the real axis these
  // are the lattice points, where the leading term is an exact zero.
  LogComplex d = LogComplex::one(p);
  try {
    d = aux::d_func(n, a, z, Side::Upper);
  } catch (const PoleError&) {
    return make(LogComplex::zero(p), Region::A, minus_log_n(n, p));
  }
  Complex expo = c.quarter + c.log_vp * c.p - c.phi * Real(n, p) + i_real(pi * (0.5 - a));
  expo = expo + prefactor(n, a, true) - d.log_value();
  return make(LogComplex::from_log(expo), Region::A, minus_log_n(n, p));
}

AsymResult eval_B(long n, const Real& alpha, const Complex& z_in) {
  Complex z = upper_point(z_in, "eval_B");
  if (z.is_zero()) throw DomainError("eval_B: z = 0");
  Precision p = z.precision();
  Real a(alpha, p);
  Real nr(n, p);
  Common c = common_pieces(a, z);
  Real pi = Real::pi(p);
  Complex base = c.quarter + prefactor(n, a, true);
  // ((z - w)/2) = ((z + w)/2)^-1.
  Complex e1 = base + c.log_vp * c.p - c.phi * nr + i_real(pi * (0.5 - a));
  Complex e2 = base - c.log_vp * c.p + c.phi * nr + i_real(pi * a);
  mp::SumResult s = mp::add(LogComplex::from_log(e1), LogComplex::from_log(e2));
  AsymResult r = make(s.value, Region::B, minus_log_n(n, p));
  r.cancellation = s.cancellation;
  r.log_envelope = max(e1.re(), e2.re());
  if (!s.value.is_zero()) {
    // O(e^(-n Re phi) / n) inside the braces, relative to the braces.
    Real braces = s.value.log_mod() - base.re();
    Real rel = -(c.phi.re() * nr) - log(nr) - braces;
    r.dropped_term_bound = max(r.dropped_term_bound, rel);
  }
  if (near_axis(z_in)) r.value = realify(r.value, r.imag_residual);
  return r;
}

AiryBrackets airy_brackets(long n, const Real& alpha, const Complex& z) {
  Precision p = z.precision();
  Real a(alpha, p);
  aux::TurningPointMap m = aux::turning_point_map(z);
  Real pw = a * 2.0 - 0.5;
  Real n16 = pow(Real(n, p), Real(1.0, p) / 6.0);
  Complex g16 = mp::exp(mp::log(m.g) / 6.0);
  // Even functions of t with their limits at t = 0.
  bool at_two = m.t.is_zero();
  Complex sinh_pt_over_t = at_two ? Complex(pw) : mp::sinh(m.t * pw) / m.t;
  Complex two_sinh_over_t = at_two ? Complex(Real(2.0, p)) : mp::sinh(m.t) * 2.0 / m.t;
  Complex root = mp::sqrt(two_sinh_over_t);  // near sqrt 2 in the disk
  return {sinh_pt_over_t * 2.0 / (root * n16 * g16), mp::cosh(m.t * pw) * 2.0 * n16 * g16 / root};
}

AsymResult eval_C(long n, const Real& alpha, const Complex& z) {
  Precision p = z.precision();
  Real a(alpha, p);
  Real nr(n, p);
  AiryBrackets br = airy_brackets(n, a, z);
  Complex f = aux::f_tilde_n(n, z);
  Real pi = Real::pi(p);
  Complex theta = Complex(pi * a) - Complex(pi * nr) / (z * z);
  Complex cs = mp::cos(theta), sn = mp::sin(theta);
  specfun::AiryQuartet q = specfun::airy_quartet(f, p);
  Complex term_a = br.a * (q.ai_d * cs + q.bi_d * sn);
  Complex term_b = br.b * (q.ai * cs + q.bi * sn);
  Complex sum = term_a + term_b;
  Real big = max(abs(term_a), abs(term_b));
  AsymResult r = make(LogComplex::from_complex(sum), Region::C, minus_log_n(n, p));
  r.cancellation = abs(sum) < big * p.cut_tolerance();
  Real pref = prefactor(n, a, false);
  if (!r.value.is_zero()) r.value = LogComplex(r.value.log_mod() + pref, r.value.phase());
  r.log_envelope = big.is_zero() ? r.value.log_mod() : log(big) + pref;
  return r;
}

AsymResult eval_D(long n, const Real& alpha, const Complex& z_in) {
  AsymResult r = eval_A(n, alpha, z_in);
  r.region.tag = Region::D;
  Precision p = r.value.precision();
  Real nr(n, p);
  Complex z = upper_point(z_in, "eval_D");
  Complex ph = aux::phi(z, Side::Upper).value;
  // The bracket's main term is value / prefactor; the dropped one is
  // O(e^(n Re phi)) in absolute terms.
  if (r.value.is_zero()) return r;
  Real main = r.value.log_mod() - prefactor(n, Real(alpha, p), true);
  r.dropped_term_bound = max(r.dropped_term_bound, ph.re() * nr - main);
  r.dropped_term_dominant = ph.re() * nr > -log(nr);
  return r;
}

AsymResult eval_origin(long n, const Real& alpha, const Complex& z_in) {
  Complex z = upper_point(z_in, "eval_origin");
  if (z.is_zero()) throw DomainError("eval_origin: z = 0");
  Precision p = z.precision();
  Real a(alpha, p);
  Real nr(n, p);
  Real pi = Real::pi(p);
  Complex w = mp::sqrt_zsq_minus4(z, Side::Upper);
  Complex lvp = mp::log((z + w) / 2.0, Side::Upper);  // log varphi(z/2)
  Complex ph = aux::phi(z, Side::Upper).value;
  Real pw = a * 2.0 - 0.5;
  Real c = lngamma(a) - log(pi * 2.0) / 2.0 + (0.5 - nr / 2.0 - a) * log(nr) + nr / 2.0;
  Complex base = Complex(c) - (mp::log(2.0 - z) + mp::log(2.0 + z)) / 4.0;
  Complex rot = i_real(pi * (0.25 - a));
  Complex e1 = base + rot - ph * nr + lvp * pw;
  Complex e2 = base - rot + ph * nr - lvp * pw;
  mp::SumResult s = mp::add(LogComplex::from_log(e1), LogComplex::from_log(e2));
  AsymResult r = make(s.value, Region::Origin, minus_log_n(n, p));
  r.cancellation = s.cancellation;
  r.log_envelope = max(e1.re(), e2.re());
  if (near_axis(z_in)) r.value = realify(r.value, r.imag_residual);
  return r;
}

namespace {

AsymResult dispatch(Region r, long n, const Real& alpha, const Complex& z) {
  switch (r) {
    case Region::Origin: return eval_origin(n, alpha, z);
    case Region::A: return eval_A(n, alpha, z);
    case Region::B: return eval_B(n, alpha, z);
    case Region::C: return eval_C(n, alpha, z);
    case Region::D: return eval_D(n, alpha, z);
  }
  throw ConfigError("unknown region");
}

AsymResult undo(AsymResult r, const QuadrantMap& q, long n) {
  if (q.conjugated) r.value = r.value.conj();
  if (q.negated) r.value = r.value.times_sign(n);
  r.region.quadrant_map = q;
  return r;
}

}  // namespace

AsymResult eval_asym(long n, const Real& alpha, const Complex& z, const Params& params) {
  if (n < 1) throw ConfigError("n must be >= 1");
  if (z.is_zero()) throw DomainError("eval_asym: z = 0");
  QuadrantMap q = quadrant_of(z);
  Complex zr = reduce(z, q);
  Region region = classify_region(n, alpha, zr, params);
  return undo(dispatch(region, n, alpha, zr), q, n);
}

AsymResult eval_in_region(Region r, long n, const Real& alpha, const Complex& z) {
  if (n < 1) throw ConfigError("n must be >= 1");
  if (z.is_zero()) throw DomainError("eval_in_region: z = 0");
  QuadrantMap q = quadrant_of(z);
  return undo(dispatch(r, n, alpha, reduce(z, q)), q, n);
}

}  // namespace tricomi::asym
