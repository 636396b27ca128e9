#include "tricomi/exact.hpp"

#include <algorithm>

#include "tricomi/specfun.hpp"

namespace tricomi::exact {

Real RecurrenceState::log_scale() const {
  Precision p = f_curr.precision();
  return Real::ln2(p) * Real(scale_exp, p);
}

namespace {

// Largest binary exponent among the nonzero components, or LONG_MIN if all
// four are zero.
long max_exponent(const Complex& a, const Complex& b) {
  long e = std::numeric_limits<long>::min();
  for (const Real* r : {&a.re(), &a.im(), &b.re(), &b.im()})
    if (!r->is_zero()) e = std::max(e, r->exponent());
  return e;
}

Complex scaled(const Complex& z, long k) { return Complex(z.re().ldexp(k), z.im().ldexp(k)); }

}  // namespace

RecurrenceState run_recurrence(long n, const Real& alpha, const Complex& x) {
  if (n < 0) throw ConfigError("degree must be non-negative");
  if (alpha.sign() <= 0) throw ConfigError("alpha must be positive");
  Precision p = x.precision();
  RecurrenceState st{Complex(p), Complex(Real(1.0, p)), 0};
  if (n == 0) return st;
  st.f_prev = st.f_curr;
  st.f_curr = x * alpha;
  for (long k = 1; k < n; ++k) {
    // (k+1) f_{k+1} = (k+alpha) x f_k - f_{k-1}
    Complex next = (x * (alpha + Real(k, p))) * st.f_curr - st.f_prev;
    next = next / Real(k + 1, p);
    st.f_prev = std::move(st.f_curr);
    st.f_curr = std::move(next);
    long e = max_exponent(st.f_prev, st.f_curr);
    if (e != std::numeric_limits<long>::min() && (e > 17 || e < -15)) {
      st.f_prev = scaled(st.f_prev, -e);
      st.f_curr = scaled(st.f_curr, -e);
      st.scale_exp += e;
    }
  }
  return st;
}

LogComplex eval_f(long n, const Real& alpha, const Complex& x, Precision prec) {
  // Evaluate in the closed first quadrant and map back through the parity
  // and Schwarz symmetries, so both hold bit-for-bit.
  Complex xw(Real(x.re(), prec), Real(x.im(), prec));
  bool negate = xw.re().sign() < 0 || (xw.re().sign() == 0 && xw.im().sign() < 0);
  if (negate) xw = -xw;
  bool conjugate = xw.im().sign() < 0;
  if (conjugate) xw = conj(xw);
  Real a(alpha, prec);
  RecurrenceState st = run_recurrence(n, a, xw);
  LogComplex m = LogComplex::from_complex(st.f_curr);
  if (m.is_zero()) return m;
  LogComplex v(m.log_mod() + st.log_scale(), m.phase());
  if (conjugate) v = v.conj();
  if (negate) v = v.times_sign(n);
  return v;
}

Real log_leading_coeff(long n, const Real& alpha) {
  if (n < 0) throw ConfigError("degree must be non-negative");
  Precision p = alpha.precision();
  if (n == 0) return Real(p);
  Real np(n, p);
  return lngamma(np + alpha) - lngamma(alpha) - lngamma(np + 1.0);
}

LogComplex eval_monic_rescaled(long n, const Real& alpha, const Complex& z, Precision prec) {
  if (n < 1) throw ConfigError("eval_monic_rescaled needs n >= 1");
  Real a(alpha, prec);
  Real root_n = sqrt(Real(n, prec));
  Complex x = Complex(Real(z.re(), prec), Real(z.im(), prec)) / root_n;
  LogComplex f = eval_f(n, a, x, prec);
  if (f.is_zero()) return f;
  return LogComplex(f.log_mod() - log_leading_coeff(n, a), f.phase(), f.half_turns());
}

LogComplex weight_wd(const Real& alpha, const Complex& z, Precision prec) {
  Complex zw(Real(z.re(), prec), Real(z.im(), prec));
  if (abs(zw.re()) <= prec.cut_tolerance()) throw DomainError("w_d: z on the imaginary axis");
  Real a(alpha, prec);
  Complex u = 1.0 / (zw * zw);
  // log(1/z^2) = -2 log(sign(Re z) z): analytic off iR and real on R.
  Complex sz = zw.re().sign() > 0 ? zw : -zw;
  Complex log_u = mp::log(sz) * -2.0;
  Complex expo = (u - 1.0 - a) * log_u - u + a;
  LogComplex g = specfun::log_gamma_complex(u + 1.0 - a, prec);
  return LogComplex::from_log(expo) / g;
}

Real log_mass(long k, const Real& alpha) {
  Precision p = alpha.precision();
  Real kp(k, p);
  Real ka = kp + alpha;
  return log(ka) * Real(k - 1, p) - kp - lngamma(kp + 1.0);
}

std::vector<NodeMass> nodes_masses(const Real& alpha, long k_max) {
  if (k_max < 0) throw ConfigError("k_max must be non-negative");
  if (alpha.sign() <= 0) throw ConfigError("alpha must be positive");
  std::vector<NodeMass> out;
  out.reserve(static_cast<size_t>(k_max) + 1);
  Precision p = alpha.precision();
  for (long k = 0; k <= k_max; ++k) {
    Real ka = Real(k, p) + alpha;
    out.push_back({k, 1.0 / sqrt(ka), exp(log_mass(k, alpha))});
  }
  return out;
}

Real h_norm(long n, const Real& alpha) {
  Precision p = alpha.precision();
  Real np(n, p);
  return exp(alpha + log(Real(2.0, p)) - log(np + alpha) - lngamma(np + 1.0));
}

Real majorant(long n, const Real& alpha, const Real& abs_x) {
  Precision p = abs_x.precision();
  Real prev(1.0, p);
  if (n == 0) return prev;
  Real cur = alpha * abs_x;
  for (long k = 1; k < n; ++k) {
    Real next = ((alpha + Real(k, p)) * abs_x * cur + prev) / Real(k + 1, p);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

OrthoSum ortho_sum(long m, long n, const Real& alpha, long k_max, Precision prec) {
  if (m < 0 || n < 0) throw ConfigError("degrees must be non-negative");
  long d = std::max(m, n);
  auto mat = ortho_matrix(d, alpha, k_max, prec);
  return mat[static_cast<size_t>(m)][static_cast<size_t>(n)];
}

}  // namespace tricomi::exact
