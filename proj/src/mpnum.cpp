#include "tricomi/mpnum.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace tricomi::mp {

Precision::Precision(long bits) : bits_(bits) {
  if (bits < 64) throw ConfigError("precision must be at least 64 bits, got " + std::to_string(bits));
}

double Precision::cut_tolerance() const { return std::ldexp(1.0, static_cast<int>(-bits_ / 2)); }

// ---------------------------------------------------------------- Real

Real::Real(Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_zero(v_, 1);
}

Real::Real(double v, Precision p) : Real(p) { mpfr_set_d(v_, v, MPFR_RNDN); }

Real::Real(const std::string& decimal, Precision p) : Real(p) {
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
    throw ConfigError("not a decimal number: " + decimal);
}

Real::Real(const Real& other, Precision p) : Real(p) { mpfr_set(v_, other.v_, MPFR_RNDN); }

Real::Real(const Real& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

std::string Real::to_string(int digits) const {
  if (is_nan()) return "nan";
  if (is_inf()) return sign() < 0 ? "-inf" : "inf";
  if (digits <= 0) digits = static_cast<int>(std::ceil(static_cast<double>(bits()) * 0.30103)) + 1;
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

static mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(mpfr_get_prec(a.get()), mpfr_get_prec(b.get())); }

Real& Real::operator+=(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real Real::ldexp(long k) const {
  Real r(precision());
  mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
  return r;
}

Real Real::pi(Precision p) {
  Real r(p);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::ln2(Precision p) {
  Real r(p);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

Real Real::inf(int sign, Precision p) {
  Real r(p);
  mpfr_set_inf(r.v_, sign);
  return r;
}

namespace {

template <typename F>
Real binary(const Real& a, const Real& b, F f) {
  Real r(Precision(static_cast<long>(wider(a, b))));
  f(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}

template <typename F>
Real unary(const Real& a, F f) {
  Real r(a.precision());
  f(r.get(), a.get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real operator+(const Real& a, const Real& b) { return binary(a, b, mpfr_add); }
Real operator-(const Real& a, const Real& b) { return binary(a, b, mpfr_sub); }
Real operator*(const Real& a, const Real& b) { return binary(a, b, mpfr_mul); }
Real operator/(const Real& a, const Real& b) { return binary(a, b, mpfr_div); }

Real operator+(const Real& a, double b) {
  Real r(a.precision());
  mpfr_add_d(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, double b) {
  Real r(a.precision());
  mpfr_sub_d(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, double b) {
  Real r(a.precision());
  mpfr_mul_d(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, double b) {
  Real r(a.precision());
  mpfr_div_d(r.get(), a.get(), b, MPFR_RNDN);
  return r;
}
Real operator+(double a, const Real& b) { return b + a; }
Real operator-(double a, const Real& b) {
  Real r(b.precision());
  mpfr_d_sub(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}
Real operator*(double a, const Real& b) { return b * a; }
Real operator/(double a, const Real& b) {
  Real r(b.precision());
  mpfr_d_div(r.get(), a, b.get(), MPFR_RNDN);
  return r;
}

bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (a.is_nan() || b.is_nan()) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.get(), b.get());
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

bool operator==(const Real& a, double b) { return !a.is_nan() && mpfr_cmp_d(a.get(), b) == 0; }

std::partial_ordering operator<=>(const Real& a, double b) {
  if (a.is_nan() || std::isnan(b)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.get(), b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

bool identical(const Real& a, const Real& b) {
  if (a.bits() != b.bits()) return false;
  if (a.is_nan() || b.is_nan()) return a.is_nan() && b.is_nan();
  return a.signbit() == b.signbit() && mpfr_equal_p(a.get(), b.get()) != 0;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real atan2(const Real& y, const Real& x) { return binary(y, x, mpfr_atan2); }
Real hypot(const Real& a, const Real& b) { return binary(a, b, mpfr_hypot); }
Real pow(const Real& x, const Real& y) { return binary(x, y, mpfr_pow); }

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

Real lngamma(const Real& x) {
  Real r(x.precision());
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }
Real min(const Real& a, const Real& b) { return a <= b ? a : b; }

// ---------------------------------------------------------------- Complex

Complex::Complex(Precision p) : re_(p), im_(p) {}
Complex::Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
Complex::Complex(Real re) : re_(std::move(re)), im_(re_.precision()) {}
Complex::Complex(double re, double im, Precision p) : re_(re, p), im_(im, p) {}

Precision Complex::precision() const { return Precision(std::max(re_.bits(), im_.bits())); }

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}
Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}
Complex& Complex::operator*=(const Complex& o) { return *this = *this * o; }
Complex& Complex::operator/=(const Complex& o) { return *this = *this / o; }
Complex Complex::operator-() const { return Complex(-re_, -im_); }

Complex operator+(const Complex& a, const Complex& b) { return Complex(a.re() + b.re(), a.im() + b.im()); }
Complex operator-(const Complex& a, const Complex& b) { return Complex(a.re() - b.re(), a.im() - b.im()); }

Complex operator*(const Complex& a, const Complex& b) {
  if (b.im().is_zero() && !b.im().signbit()) return Complex(a.re() * b.re(), a.im() * b.re());
  if (a.im().is_zero() && !a.im().signbit()) return Complex(a.re() * b.re(), a.re() * b.im());
  return Complex(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}

Complex operator/(const Complex& a, const Complex& b) {
  if (b.im().is_zero()) return Complex(a.re() / b.re(), a.im() / b.re());
  // Smith's algorithm keeps intermediate magnitudes bounded.
  if (abs(b.re()) >= abs(b.im())) {
    Real r = b.im() / b.re();
    Real d = b.re() + b.im() * r;
    return Complex((a.re() + a.im() * r) / d, (a.im() - a.re() * r) / d);
  }
  Real r = b.re() / b.im();
  Real d = b.re() * r + b.im();
  return Complex((a.re() * r + a.im()) / d, (a.im() * r - a.re()) / d);
}

Complex operator+(const Complex& a, const Real& b) { return Complex(a.re() + b, a.im()); }
Complex operator-(const Complex& a, const Real& b) { return Complex(a.re() - b, a.im()); }
Complex operator*(const Complex& a, const Real& b) { return Complex(a.re() * b, a.im() * b); }
Complex operator/(const Complex& a, const Real& b) { return Complex(a.re() / b, a.im() / b); }
Complex operator*(const Real& a, const Complex& b) { return b * a; }
Complex operator+(const Real& a, const Complex& b) { return Complex(a + b.re(), b.im()); }
Complex operator-(const Real& a, const Complex& b) { return Complex(a - b.re(), -b.im()); }
Complex operator/(const Real& a, const Complex& b) { return Complex(a) / b; }
Complex operator+(const Complex& a, double b) { return Complex(a.re() + b, a.im()); }
Complex operator-(const Complex& a, double b) { return Complex(a.re() - b, a.im()); }
Complex operator*(const Complex& a, double b) { return Complex(a.re() * b, a.im() * b); }
Complex operator/(const Complex& a, double b) { return Complex(a.re() / b, a.im() / b); }
Complex operator+(double a, const Complex& b) { return b + a; }
Complex operator-(double a, const Complex& b) { return Complex(a - b.re(), -b.im()); }
Complex operator*(double a, const Complex& b) { return b * a; }
Complex operator/(double a, const Complex& b) { return Complex(Real(a, b.precision()), Real(b.precision())) / b; }

bool identical(const Complex& a, const Complex& b) { return identical(a.re(), b.re()) && identical(a.im(), b.im()); }

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }
Complex times_i(const Complex& z) { return Complex(-z.im(), z.re()); }
Real abs(const Complex& z) { return hypot(z.re(), z.im()); }
Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real arg(const Complex& z, Side side) {
  if (z.im().is_zero()) {
    Precision p = z.precision();
    if (z.re().sign() >= 0) return Real(p);
    Real pi = Real::pi(p);
    return side == Side::Lower ? -pi : pi;
  }
  return atan2(z.im(), z.re());
}

Complex log(const Complex& z, Side side) {
  if (z.is_zero()) throw PoleError("log(0)");
  Real mod = abs(z);
  return Complex(log(mod), arg(z, side));
}

Complex log1p(const Complex& u, Side side) {
  Complex w = u + 1.0;
  if (w.is_zero()) throw PoleError("log(0)");
  // log|1+u| = log1p(2 Re u + |u|^2) / 2 keeps accuracy for small u.
  Real t = u.re() * 2.0 + norm(u);
  return Complex(log1p(t) / 2.0, arg(w, side));
}

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  if (z.im().is_zero()) return Complex(m, Real(z.precision()));
  return Complex(m * cos(z.im()), m * sin(z.im()));
}

Complex sqrt(const Complex& z, Side side) {
  Precision p = z.precision();
  if (z.is_zero()) return Complex(p);
  if (z.im().is_zero()) {
    if (z.re().sign() > 0) return Complex(sqrt(z.re()), Real(p));
    Real s = sqrt(-z.re());
    return Complex(Real(p), side == Side::Lower ? -s : s);
  }
  // Stable principal root: t = sqrt((|z| + |Re z|) / 2).
  Real t = sqrt((abs(z) + abs(z.re())) / 2.0);
  if (z.re().sign() >= 0) return Complex(t, z.im() / (t * 2.0));
  Real u = z.im().sign() < 0 ? -t : t;
  return Complex(abs(z.im()) / (t * 2.0), u);
}

Complex sin(const Complex& z) { return Complex(sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())); }
Complex cos(const Complex& z) { return Complex(cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))); }
Complex sinh(const Complex& z) { return Complex(sinh(z.re()) * cos(z.im()), cosh(z.re()) * sin(z.im())); }
Complex cosh(const Complex& z) { return Complex(cosh(z.re()) * cos(z.im()), sinh(z.re()) * sin(z.im())); }
Complex tanh(const Complex& z) { return sinh(z) / cosh(z); }

Complex pow(const Complex& z, const Complex& p, Side side) { return exp(p * log(z, side)); }
Complex pow(const Complex& z, const Real& p, Side side) { return exp(log(z, side) * p); }

// ---------------------------------------------------------------- LogComplex

LogComplex::LogComplex(Real log_mod, Real phase, long half_turns)
    : log_mod_(std::move(log_mod)), phase_(std::move(phase)), half_turns_(half_turns) {}

LogComplex LogComplex::from_log(const Complex& log_value) { return LogComplex(log_value.re(), log_value.im()); }

LogComplex LogComplex::from_complex(const Complex& z) {
  Precision p = z.precision();
  if (z.is_zero()) return zero(p);
  return LogComplex(log(abs(z)), arg(z));
}

LogComplex LogComplex::one(Precision p) { return LogComplex(Real(p), Real(p)); }
LogComplex LogComplex::zero(Precision p) { return LogComplex(Real::inf(-1, p), Real(p)); }

Precision LogComplex::precision() const { return Precision(std::max(log_mod_.bits(), phase_.bits())); }

Real LogComplex::total_phase() const {
  if (half_turns_ == 0) return phase_;
  return phase_ + Real::pi(phase_.precision()) * Real(half_turns_, phase_.precision());
}

Real LogComplex::reduced_phase() const {
  Precision p = precision();
  // Reduce with extra bits so large unreduced phases keep their accuracy.
  long extra = 16;
  if (!phase_.is_zero() && phase_.exponent() > 0) extra += phase_.exponent();
  Precision q = p.plus(extra);
  Real two_pi = Real::pi(q) * 2.0;
  Real t = Real(phase_, q) + Real::pi(q) * Real(half_turns_, q);
  Real k = floor(t / two_pi);
  t -= k * two_pi;  // now in [0, 2 pi)
  if (t > Real::pi(q)) t -= two_pi;
  return Real(t, p);
}

Complex LogComplex::log_value() const { return Complex(log_mod_, total_phase()); }

Complex LogComplex::to_complex() const {
  if (is_zero()) return Complex(precision());
  Real m = exp(log_mod_);
  Real ph = reduced_phase();
  return Complex(m * cos(ph), m * sin(ph));
}

LogComplex LogComplex::conj() const { return LogComplex(log_mod_, -phase_, -half_turns_); }
LogComplex LogComplex::negated() const { return LogComplex(log_mod_, phase_, half_turns_ + 1); }
LogComplex LogComplex::times_sign(long k) const {
  if (k % 2 == 0) return *this;
  return negated();
}

LogComplex LogComplex::pow(const Complex& p) const {
  if (is_zero()) {
    if (p.re().sign() <= 0) throw PoleError("0^p with Re p <= 0");
    return *this;
  }
  return from_log(log_value() * p);
}

LogComplex LogComplex::pow(const Real& p) const {
  if (is_zero()) {
    if (p.sign() <= 0) throw PoleError("0^p with p <= 0");
    return *this;
  }
  return LogComplex(log_mod_ * p, total_phase() * p);
}

LogComplex LogComplex::inverse() const {
  if (is_zero()) throw PoleError("1/0");
  return LogComplex(-log_mod_, -phase_, -half_turns_);
}

LogComplex operator*(const LogComplex& a, const LogComplex& b) {
  return LogComplex(a.log_mod() + b.log_mod(), a.phase() + b.phase(), a.half_turns() + b.half_turns());
}

LogComplex operator/(const LogComplex& a, const LogComplex& b) {
  if (b.is_zero()) throw PoleError("division by exact zero");
  return LogComplex(a.log_mod() - b.log_mod(), a.phase() - b.phase(), a.half_turns() - b.half_turns());
}

bool same_value_bits(const LogComplex& a, const LogComplex& b) {
  long dh = a.half_turns() - b.half_turns();
  return identical(a.log_mod(), b.log_mod()) && identical(a.phase(), b.phase()) && dh % 2 == 0;
}

namespace {

// e^(dl) * e^(i (dp + pi*dh)), exact when dp == 0.
Complex relative_factor(const Real& dl, const Real& dp, long dh) {
  Precision p = Precision(std::max(dl.bits(), dp.bits()));
  Real m = exp(dl);
  Complex r = dp.is_zero() ? Complex(m, Real(p)) : Complex(m * cos(dp), m * sin(dp));
  if (dh % 2 != 0) r = -r;
  return r;
}

}  // namespace

SumResult add(const LogComplex& a, const LogComplex& b) {
  if (!a.log_mod().is_finite() && !a.is_zero()) throw DomainError("add: non-finite operand");
  if (!b.log_mod().is_finite() && !b.is_zero()) throw DomainError("add: non-finite operand");
  if (a.is_zero()) return {b, false};
  if (b.is_zero()) return {a, false};
  const LogComplex& big = a.log_mod() >= b.log_mod() ? a : b;
  const LogComplex& small = a.log_mod() >= b.log_mod() ? b : a;
  Complex r = relative_factor(small.log_mod() - big.log_mod(), small.phase() - big.phase(),
                              small.half_turns() - big.half_turns());
  Complex s = r + 1.0;
  Precision p = big.precision();
  if (s.is_zero()) return {LogComplex::zero(p), true};
  Real mod = abs(s);
  bool cancelled = mod < p.cut_tolerance();
  LogComplex factor(log(mod), arg(s));
  return {big * factor, cancelled};
}

Complex ratio_minus_one(const LogComplex& a, const LogComplex& b) {
  Real dl = a.log_mod() - b.log_mod();
  LogComplex delta(dl, a.phase() - b.phase(), a.half_turns() - b.half_turns());
  Real dp = delta.reduced_phase();
  // e^(dl) e^(i dp) - 1 = expm1(dl) cos dp + (cos dp - 1) + i e^(dl) sin dp
  Real s2 = sin(dp / 2.0);
  Real cos_m1 = -(s2 * s2 * 2.0);
  Real em1 = expm1(dl);
  Real c = cos(dp);
  Real s = sin(dp);
  return Complex(em1 * c + cos_m1, (em1 + 1.0) * s);
}

Side resolve_side(const Complex& z, Side side) {
  double tol = z.precision().cut_tolerance();
  const Real& y = z.im();
  if (side == Side::Infer) {
    if (abs(y) <= tol) throw DomainError("point within 2^(-bits/2) of a branch cut; pass an explicit side");
    return y.sign() > 0 ? Side::Upper : Side::Lower;
  }
  if (!y.is_zero() && abs(y) > tol) {
    Side actual = y.sign() > 0 ? Side::Upper : Side::Lower;
    if (actual != side) throw DomainError("explicit side contradicts sign of Im z");
  }
  return side;
}

Complex sqrt_zsq_minus4(const Complex& z, Side side) {
  double tol = z.precision().cut_tolerance();
  bool near_real = abs(z.im()) <= tol;
  Side s = Side::Upper;
  if ((near_real && abs(z.re()) <= 2.0 + tol) || side != Side::Infer) s = resolve_side(z, side);
  // On the real axis evaluate the boundary value of the requested side. For
  // x < -2 both roots flip together, so either side gives -sqrt(x^2 - 4).
  Complex zs = near_real ? Complex(z.re(), Real(z.precision())) : z;
  return sqrt(zs - 2.0, s) * sqrt(zs + 2.0, s);
}

LogComplex pow_principal(const Complex& z, const Complex& p, Side side) {
  if (z.is_zero()) {
    if (p.re().sign() <= 0) throw DomainError("0^p with Re p <= 0");
    return LogComplex::zero(z.precision());
  }
  Complex l = log(z, side == Side::Lower ? Side::Lower : Side::Upper);
  return LogComplex::from_log(l * p);
}

}  // namespace tricomi::mp
