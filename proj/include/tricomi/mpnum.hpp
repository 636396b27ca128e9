#pragma once

// Configurable-precision real/complex arithmetic on top of MPFR, the
// overflow-proof LogComplex value type, and the branch-aware elementary
// functions every other module is built from.
//
// Precision is never global: every Real carries its own mantissa width and
// binary operations produce a result at the wider of their operands.

#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tricomi {

/// Thrown when an argument lies on (or too close to) a branch cut or outside
/// the domain of a formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown at poles (Gamma at non-positive integers, z = 0 in 1/z^k, ...).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Invalid parameter combinations (epsilon >= delta, precision too small, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tricomi

namespace tricomi::mp {

/// Mantissa width in bits. At least 64.
class Precision {
 public:
  explicit Precision(long bits);
  long bits() const { return bits_; }
  Precision plus(long extra) const { return Precision(bits_ + extra); }
  /// Distance from a branch cut below which a point is rejected: 2^(-bits/2).
  double cut_tolerance() const;
  friend bool operator==(Precision, Precision) = default;

 private:
  long bits_;
};

inline constexpr long kDefaultBits = 256;

/// Which side of a branch cut a boundary value is taken from. `Infer` uses
/// sign(Im z) and, for principal functions on the negative axis, the upper
/// side (Arg in (-pi, pi]).
enum class Side { Infer, Upper, Lower };

class Real {
 public:
  explicit Real(Precision p);
  Real(double v, Precision p);
  template <std::integral I>
  Real(I v, Precision p) : Real(p) {
    if constexpr (std::is_signed_v<I>)
      mpfr_set_si(v_, static_cast<long>(v), MPFR_RNDN);
    else
      mpfr_set_ui(v_, static_cast<unsigned long>(v), MPFR_RNDN);
  }
  /// Decimal string, e.g. "0.1" rounded once at precision p.
  Real(const std::string& decimal, Precision p);
  Real(const Real& other, Precision p);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return Precision(static_cast<long>(mpfr_get_prec(v_))); }
  long bits() const { return static_cast<long>(mpfr_get_prec(v_)); }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Decimal rendering with `digits` significant digits (0 = enough for the
  /// full mantissa).
  std::string to_string(int digits = 0) const;

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_inf() const { return mpfr_inf_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool signbit() const { return mpfr_signbit(v_) != 0; }
  /// Binary exponent e with |x| in [2^(e-1), 2^e); undefined for 0.
  long exponent() const { return static_cast<long>(mpfr_get_exp(v_)); }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real operator-() const;

  /// Multiply by 2^k exactly.
  Real ldexp(long k) const;

  static Real pi(Precision p);
  static Real ln2(Precision p);
  static Real inf(int sign, Precision p);

 private:
  mpfr_t v_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator+(const Real& a, double b);
Real operator-(const Real& a, double b);
Real operator*(const Real& a, double b);
Real operator/(const Real& a, double b);
Real operator+(double a, const Real& b);
Real operator-(double a, const Real& b);
Real operator*(double a, const Real& b);
Real operator/(double a, const Real& b);

bool operator==(const Real& a, const Real& b);
std::partial_ordering operator<=>(const Real& a, const Real& b);
bool operator==(const Real& a, double b);
std::partial_ordering operator<=>(const Real& a, double b);

/// Bitwise identity: same precision, same sign, same mantissa and exponent.
bool identical(const Real& a, const Real& b);

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& a, const Real& b);
Real pow(const Real& x, const Real& y);
Real floor(const Real& x);
Real round(const Real& x);
Real lngamma(const Real& x);  // log|Gamma(x)|
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

class Complex {
 public:
  explicit Complex(Precision p);
  Complex(Real re, Real im);
  explicit Complex(Real re);
  Complex(double re, double im, Precision p);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  Precision precision() const;

  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex operator-() const;

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool is_real() const { return im_.is_zero(); }

 private:
  Real re_;
  Real im_;
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator+(const Complex& a, const Real& b);
Complex operator-(const Complex& a, const Real& b);
Complex operator*(const Complex& a, const Real& b);
Complex operator/(const Complex& a, const Real& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator+(const Real& a, const Complex& b);
Complex operator-(const Real& a, const Complex& b);
Complex operator/(const Real& a, const Complex& b);
Complex operator+(const Complex& a, double b);
Complex operator-(const Complex& a, double b);
Complex operator*(const Complex& a, double b);
Complex operator/(const Complex& a, double b);
Complex operator+(double a, const Complex& b);
Complex operator-(double a, const Complex& b);
Complex operator*(double a, const Complex& b);
Complex operator/(double a, const Complex& b);

bool identical(const Complex& a, const Complex& b);

Complex conj(const Complex& z);
Complex times_i(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2

/// Argument in (-pi, pi]; on the negative real axis the side decides +-pi.
Real arg(const Complex& z, Side side = Side::Infer);
/// Principal logarithm, log|z| + i arg(z, side).
Complex log(const Complex& z, Side side = Side::Infer);
/// log(1 + u), accurate for small |u|.
Complex log1p(const Complex& u, Side side = Side::Infer);
Complex exp(const Complex& z);
/// Principal square root, Re >= 0; boundary values on the negative axis by side.
Complex sqrt(const Complex& z, Side side = Side::Infer);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex sinh(const Complex& z);
Complex cosh(const Complex& z);
Complex tanh(const Complex& z);
/// Principal power exp(p Log z).
Complex pow(const Complex& z, const Complex& p, Side side = Side::Infer);
Complex pow(const Complex& z, const Real& p, Side side = Side::Infer);

/// A complex value held as exp(log_mod + i (phase + pi * half_turns)).
///
/// Multiplication and division add the fields, so products of quantities of
/// size e^(+-n log n) never overflow. The phase is not reduced; reduction
/// happens only at display time. Sign flips and conjugation are exact: a
/// sign flip bumps the integer half-turn count.
class LogComplex {
 public:
  LogComplex(Real log_mod, Real phase, long half_turns = 0);

  /// exp(L) for a complex logarithm L.
  static LogComplex from_log(const Complex& log_value);
  static LogComplex from_complex(const Complex& z);
  static LogComplex one(Precision p);
  static LogComplex zero(Precision p);

  const Real& log_mod() const { return log_mod_; }
  const Real& phase() const { return phase_; }
  long half_turns() const { return half_turns_; }
  Precision precision() const;

  bool is_zero() const { return log_mod_.is_inf() && log_mod_.sign() < 0; }

  /// phase + pi * half_turns, unreduced.
  Real total_phase() const;
  /// Total phase reduced to (-pi, pi].
  Real reduced_phase() const;
  /// log_mod + i * total_phase.
  Complex log_value() const;
  /// exp(log_mod) * e^(i phase); overflows only past MPFR's exponent range.
  Complex to_complex() const;

  LogComplex conj() const;
  LogComplex negated() const;
  /// Multiply by (-1)^k exactly.
  LogComplex times_sign(long k) const;
  /// value^p using the stored (wound) phase as the branch.
  LogComplex pow(const Complex& p) const;
  LogComplex pow(const Real& p) const;
  LogComplex inverse() const;

 private:
  Real log_mod_;
  Real phase_;
  long half_turns_;
};

LogComplex operator*(const LogComplex& a, const LogComplex& b);
LogComplex operator/(const LogComplex& a, const LogComplex& b);

/// Field-wise bit identity, with half_turns compared mod 2.
bool same_value_bits(const LogComplex& a, const LogComplex& b);

struct SumResult {
  LogComplex value;
  /// Set when |a + b| < 2^(-bits/2) * max(|a|, |b|): the result carries
  /// fewer than bits/2 correct bits.
  bool cancellation = false;
};

/// a + b, computed by factoring out the larger modulus.
SumResult add(const LogComplex& a, const LogComplex& b);

/// exp(delta) - 1 for the ratio a / b, computed without forming either value.
Complex ratio_minus_one(const LogComplex& a, const LogComplex& b);

/// Branch of sqrt(z^2 - 4) analytic off [-2, 2] with value/z -> 1 at infinity,
/// i.e. sqrt(z - 2) * sqrt(z + 2) with principal roots. With Side::Infer a
/// point within the cut tolerance of [-2, 2] is a DomainError; with an explicit
/// side the boundary value from that half-plane is returned.
Complex sqrt_zsq_minus4(const Complex& z, Side side = Side::Infer);

/// exp(p Log z) with Arg z in (-pi, pi], returned in log form.
LogComplex pow_principal(const Complex& z, const Complex& p, Side side = Side::Infer);

/// Resolve an explicit side or infer it from sign(Im z); throws DomainError
/// when Infer meets |Im z| below the cut tolerance, or when an explicit side
/// contradicts a nonzero imaginary part.
Side resolve_side(const Complex& z, Side side);

}  // namespace tricomi::mp
