#pragma once

#include <string>

#include "tricomi/mpnum.hpp"

namespace testutil {

using tricomi::mp::Complex;
using tricomi::mp::LogComplex;
using tricomi::mp::Precision;
using tricomi::mp::Real;

inline Real R(const std::string& s, Precision p) { return Real(s, p); }
inline Complex C(const std::string& re, const std::string& im, Precision p) { return Complex(Real(re, p), Real(im, p)); }

/// |a - b| / |b| (or |a - b| when b == 0), as a double.
inline double rel_err(const Complex& a, const Complex& b) {
  Real d = abs(a - b);
  Real m = abs(b);
  if (m.is_zero()) return d.to_double();
  return (d / m).to_double();
}

inline double rel_err(const Real& a, const Real& b) {
  Real d = abs(a - b);
  if (b.is_zero()) return d.to_double();
  return (d / abs(b)).to_double();
}

/// Distance of the phase difference from the nearest multiple of 2 pi.
inline double phase_dist(const Real& a, const Real& b) {
  Precision p = a.precision();
  Real two_pi = Real::pi(p) * 2.0;
  Real d = a - b;
  Real k = round(d / two_pi);
  return abs(d - k * two_pi).to_double();
}

/// Relative error of two values given in log form: |exp(la - lb) - 1|.
inline double log_rel_err(const LogComplex& a, const LogComplex& b) {
  return abs(tricomi::mp::ratio_minus_one(a, b)).to_double();
}

}  // namespace testutil
