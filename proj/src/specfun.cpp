#include "tricomi/specfun.hpp"

#include <cmath>
#include <mutex>

namespace tricomi::specfun {

using mp::Side;

// ---------------------------------------------------------------- tangent numbers

std::vector<mpz_class> tangent_numbers(std::size_t n) {
  static std::mutex mu;
  static std::vector<mpz_class> cache;  // cache[k-1] = T_k
  std::lock_guard lock(mu);
  if (cache.size() < n) {
    // Brent-Harvey in-place recurrence; recomputed from scratch on growth.
    std::size_t m = std::max<std::size_t>(n, 2 * cache.size());
    std::vector<mpz_class> t(m + 1);
    t[1] = 1;
    for (std::size_t k = 2; k <= m; ++k) t[k] = static_cast<unsigned long>(k - 1) * t[k - 1];
    for (std::size_t k = 2; k <= m; ++k)
      for (std::size_t j = k; j <= m; ++j)
        t[j] = static_cast<unsigned long>(j - k) * t[j - 1] + static_cast<unsigned long>(j - k + 2) * t[j];
    cache.assign(t.begin() + 1, t.end());
  }
  // A copy: the cache may be regrown by another thread once the lock drops.
  return std::vector<mpz_class>(cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n));
}

mpq_class bernoulli_2k(std::size_t k) {
  const auto t = tangent_numbers(k);
  mpz_class four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  mpq_class b(mpz_class(static_cast<unsigned long>(2 * k)) * t[k - 1], four_k * (four_k - 1));
  b.canonicalize();
  if (k % 2 == 0) b = -b;
  return b;
}

namespace {

Real from_q(const mpq_class& q, Precision p) {
  Real r(p);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// Stirling coefficients B_2k / (2k (2k - 1)), cached as exact rationals.
mpq_class stirling_coefficient(std::size_t k) {
  static std::mutex mu;
  static std::vector<mpq_class> cache;
  std::lock_guard lock(mu);
  while (cache.size() < k) {
    std::size_t j = cache.size() + 1;
    mpq_class c = bernoulli_2k(j) / mpq_class(static_cast<unsigned long>(2 * j * (2 * j - 1)));
    c.canonicalize();
    cache.push_back(c);
  }
  return cache[k - 1];
}

// Stirling series for Re z large; principal branch.
Complex stirling(const Complex& z, Precision wp) {
  Real half_log_2pi = log(Real::pi(wp) * 2.0) / 2.0;
  Complex lz = mp::log(z);
  Complex s = (z - 0.5) * lz - z + half_log_2pi;
  Complex inv = 1.0 / z;
  Complex inv2 = inv * inv;
  Complex pw = inv;
  Real tiny = Real(1.0, wp).ldexp(-wp.bits() - 8);
  Real prev = Real::inf(1, wp);
  for (std::size_t k = 1; k < 4000; ++k) {
    Complex term = pw * from_q(stirling_coefficient(k), wp);
    Real mag = abs(term);
    if (mag > prev) break;  // past the optimal truncation point
    s += term;
    if (mag < tiny * max(abs(s), Real(1.0, wp))) break;
    prev = mag;
    pw *= inv2;
  }
  return s;
}

// Principal log Gamma for Re z >= 1/2.
Complex log_gamma_right(const Complex& z, Precision wp) {
  double threshold = 10.0 + static_cast<double>(wp.bits()) / 8.0;
  double x = z.re().to_double();
  long shift = x >= threshold ? 0 : static_cast<long>(std::ceil(threshold - x));
  Complex zs = z + Real(shift, wp);
  Complex s = stirling(zs, wp);
  for (long k = 0; k < shift; ++k) s -= mp::log(z + Real(k, wp));
  return s;
}

// log sin(pi z) on the upper half-plane, the branch continuous there that
// matches the principal log Gamma under reflection.
Complex log_sin_pi_upper(const Complex& z, Precision wp) {
  Real pi = Real::pi(wp);
  Complex two_pi_i_z = mp::times_i(z) * (pi * 2.0);
  Complex e = mp::exp(two_pi_i_z);  // |e| < 1 for Im z > 0
  Complex l = mp::log1p(-e);
  Complex lin = mp::times_i(z) * (-pi);
  return Complex(lin.re() - log(Real(2.0, wp)) + l.re(), lin.im() + pi / 2.0 + l.im());
}

Complex log_gamma_upper_or_right(const Complex& z, Precision wp) {
  if (z.re() >= 0.5) return log_gamma_right(z, wp);
  // Im z > 0 here.
  Complex one_minus = 1.0 - z;
  Complex lg = log_gamma_right(one_minus, wp);
  Real log_pi = log(Real::pi(wp));
  return Complex(log_pi, Real(wp)) - log_sin_pi_upper(z, wp) - lg;
}

}  // namespace

LogComplex log_gamma_complex(const Complex& z, Precision prec) {
  if (!z.is_finite()) throw DomainError("log_gamma: non-finite argument");
  double mag = abs(z).to_double();
  long extra = 32 + static_cast<long>(std::ceil(std::log2(std::max(2.0, mag))));
  Precision wp = prec.plus(extra);
  Complex zw(Real(z.re(), wp), Real(z.im(), wp));

  if (zw.im().is_zero()) {
    const Real& x = zw.re();
    if (x.sign() <= 0 && x.is_integer()) throw PoleError("log_gamma: pole at non-positive integer");
    if (x >= 0.5) {
      Complex l = log_gamma_right(zw, wp);
      return LogComplex(Real(l.re(), prec), Real(prec));
    }
    // Real reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    Real pi = Real::pi(wp);
    Real s = sin(pi * x);
    Complex l1 = log_gamma_right(Complex(1.0 - x), wp);
    Real lm = log(pi) - log(abs(s)) - l1.re();
    Real phase = s.sign() < 0 ? Real::pi(prec) : Real(prec);
    return LogComplex(Real(lm, prec), phase);
  }

  bool lower = zw.im().sign() < 0;
  Complex zu = lower ? mp::conj(zw) : zw;
  Complex l = log_gamma_upper_or_right(zu, wp);
  if (lower) l = mp::conj(l);
  return LogComplex(Real(l.re(), prec), Real(l.im(), prec));
}

// ---------------------------------------------------------------- Airy

double airy_crossover_radius(Precision prec) {
  // e^(-2 zeta) < 2^-(bits+10) with zeta = (2/3) R^(3/2)
  double need = 0.75 * static_cast<double>(prec.bits() + 10) * std::log(2.0);
  return std::pow(need, 2.0 / 3.0);
}

namespace {

struct Constants {
  Real ai0;   // Ai(0) = 3^(-2/3) / Gamma(2/3)
  Real mai0;  // -Ai'(0) = 3^(-1/3) / Gamma(1/3)
  Real sqrt3;
};

Constants airy_constants(Precision p) {
  Real three(3.0, p);
  Real g23(p), g13(p);
  Real two_thirds = Real(2.0, p) / three;
  Real one_third = Real(1.0, p) / three;
  mpfr_gamma(g23.get(), two_thirds.get(), MPFR_RNDN);
  mpfr_gamma(g13.get(), one_third.get(), MPFR_RNDN);
  Real ai0 = pow(three, -two_thirds) / g23;
  Real mai0 = pow(three, -one_third) / g13;
  return {ai0, mai0, sqrt(three)};
}

Complex round_to(const Complex& z, Precision p) { return Complex(Real(z.re(), p), Real(z.im(), p)); }

AiryQuartet rounded(const AiryQuartet& q, Precision p) {
  return {round_to(q.ai, p), round_to(q.bi, p), round_to(q.ai_d, p), round_to(q.bi_d, p)};
}

// Ai and Ai' from the asymptotic expansion, valid for |arg z| <= 2 pi / 3.
std::pair<Complex, Complex> ai_sector(const Complex& z, Precision wp) {
  Complex z14 = mp::pow(z, Real(0.25, wp));
  Complex z32 = mp::pow(z, Real(1.5, wp));
  Complex zeta = z32 * (Real(2.0, wp) / 3.0);
  Complex inv_zeta = 1.0 / zeta;
  Real uk(1.0, wp);
  Complex sum_u(Real(1.0, wp), Real(wp));
  Complex sum_v(Real(1.0, wp), Real(wp));
  Complex pw(Real(1.0, wp), Real(wp));
  Real tiny = Real(1.0, wp).ldexp(-wp.bits() - 4);
  Real prev = Real::inf(1, wp);
  for (long k = 1; k < 10000; ++k) {
    double kd = static_cast<double>(k);
    uk = uk * ((6 * kd - 5) * (6 * kd - 3) * (6 * kd - 1)) / ((2 * kd - 1) * 216 * kd);
    Real vk = -(uk * (6 * kd + 1)) / (6 * kd - 1);
    pw = -(pw * inv_zeta);
    Complex tu = pw * uk;
    Complex tv = pw * vk;
    Real mag = max(abs(tu), abs(tv));
    if (mag > prev) break;
    sum_u += tu;
    sum_v += tv;
    if (mag < tiny) break;
    prev = mag;
  }
  Complex e = mp::exp(-zeta);
  Real two_sqrt_pi = sqrt(Real::pi(wp)) * 2.0;
  Complex ai = e * sum_u / (z14 * two_sqrt_pi);
  Complex ai_d = -(z14 * e * sum_v) / two_sqrt_pi;
  return {ai, ai_d};
}

struct Omegas {
  Complex w;     // e^(2 pi i / 3)
  Complex wbar;  // e^(-2 pi i / 3)
  Complex e6;    // e^(i pi / 6)
  Complex e6bar;
};

Omegas omegas(Precision p) {
  Real half(0.5, p);
  Real s32 = sqrt(Real(3.0, p)) / 2.0;
  return {Complex(-half, s32), Complex(-half, -s32), Complex(s32, half), Complex(s32, -half)};
}

// Ai, Ai' anywhere with |z| large, via the connection formula outside the
// sector |arg z| <= 2 pi / 3.
std::pair<Complex, Complex> ai_any(const Complex& z, Precision wp, const Omegas& om) {
  Real a = mp::arg(z);
  Real bound = Real::pi(wp) * 2.0 / 3.0;
  if (abs(a) <= bound) return ai_sector(z, wp);
  // Ai(z) = -wbar Ai(wbar z) - w Ai(w z);  Ai'(z) = -w Ai'(wbar z) - wbar Ai'(w z)
  auto [a1, d1] = ai_sector(om.wbar * z, wp);
  auto [a2, d2] = ai_sector(om.w * z, wp);
  Complex ai = -(om.wbar * a1) - om.w * a2;
  Complex ai_d = -(om.w * d1) - om.wbar * d2;
  return {ai, ai_d};
}

}  // namespace

AiryQuartet airy_series(const Complex& z, Precision prec) {
  double r = abs(z).to_double();
  long guard = 24 + static_cast<long>(std::ceil(4.0 / 3.0 * std::pow(r, 1.5) / std::log(2.0)));
  Precision wp = prec.plus(guard);
  Complex zw = round_to(z, wp);
  Constants c = airy_constants(wp);

  // f = sum t_k, g = sum s_k, and their derivatives d_k, e_k.
  Complex z3 = zw * zw * zw;
  Complex t(Real(1.0, wp), Real(wp));
  Complex s = zw;
  Complex d = zw * zw / 2.0;
  Complex e(Real(1.0, wp), Real(wp));
  Complex f = t, g = s, fd = d, gd = e;
  Real tiny = Real(1.0, wp).ldexp(-wp.bits() - 4);
  for (long k = 1; k < 100000; ++k) {
    double kd = static_cast<double>(k);
    t = t * z3 / ((3 * kd - 1) * (3 * kd));
    s = s * z3 / ((3 * kd) * (3 * kd + 1));
    e = e * z3 / ((3 * kd) * (3 * kd - 2));
    if (k >= 2) d = d * z3 / ((3 * kd - 1) * (3 * kd - 3));
    f += t;
    g += s;
    gd += e;
    if (k >= 2) fd += d;
    Real mag = max(max(abs(t), abs(s)), max(abs(d), abs(e)));
    if (k > 2 && mag < tiny) break;
  }
  AiryQuartet q{f * c.ai0 - g * c.mai0, (f * c.ai0 + g * c.mai0) * c.sqrt3, fd * c.ai0 - gd * c.mai0,
                (fd * c.ai0 + gd * c.mai0) * c.sqrt3};
  return rounded(q, prec);
}

AiryQuartet airy_asymptotic(const Complex& z, Precision prec) {
  if (z.is_zero()) throw DomainError("airy_asymptotic: z = 0");
  Precision wp = prec.plus(32);
  Complex zw = round_to(z, wp);
  Omegas om = omegas(wp);
  auto [ai, ai_d] = ai_any(zw, wp, om);
  auto [aw, dw] = ai_any(om.w * zw, wp, om);
  auto [awb, dwb] = ai_any(om.wbar * zw, wp, om);
  // Bi(z) = e^(i pi/6) Ai(w z) + e^(-i pi/6) Ai(wbar z)
  Complex bi = om.e6 * aw + om.e6bar * awb;
  Complex bi_d = om.e6 * om.w * dw + om.e6bar * om.wbar * dwb;
  return rounded(AiryQuartet{ai, bi, ai_d, bi_d}, prec);
}

AiryQuartet airy_quartet(const Complex& z, Precision prec) {
  if (!z.is_finite()) throw DomainError("airy: non-finite argument");
  if (abs(z) <= airy_crossover_radius(prec)) return airy_series(z, prec);
  return airy_asymptotic(z, prec);
}

}  // namespace tricomi::specfun
