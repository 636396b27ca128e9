#include "tricomi/harness.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <omp.h>

#include "tricomi/specfun.hpp"

namespace tricomi::harness {

namespace {

std::string join(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " " + b;
}

}  // namespace

std::string EvalRecord::flags() const { return join(asym_flags, near_zero ? "near_zero" : ""); }

std::string EvalRecord::error() const {
  std::string s;
  if (!exact_error.empty()) s = "exact: " + exact_error;
  if (!asym_error.empty()) s += (s.empty() ? "" : "; ") + std::string("asym: ") + asym_error;
  return s;
}

double log_ratio(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero() || b.is_zero()) return std::numeric_limits<double>::infinity();
  Precision p = a.precision();
  Real dm = a.log_mod() - b.log_mod();
  Real dp = a.total_phase() - b.total_phase();
  Real two_pi = Real::pi(p) * 2.0;
  dp = dp - round(dp / two_pi) * two_pi;
  return hypot(dm, dp).to_double();
}

EvalRecord compare_point(long n, const Real& alpha, const Complex& z, const Params& params, Precision prec) {
  Real a(alpha, prec);
  Complex zp(Real(z.re(), prec), Real(z.im(), prec));
  EvalRecord rec(n, a, zp);
  try {
    rec.log_exact = exact::eval_monic_rescaled(n, a, zp, prec);
  } catch (const std::exception& e) {
    rec.exact_error = e.what();
  }
  try {
    asym::AsymResult r = asym::eval_asym(n, a, zp, params);
    rec.region = r.region.tag;
    rec.log_asym = r.value;
    rec.dropped_term_bound = r.dropped_term_bound;
    rec.asym_flags = r.flags();
    // A leading term that vanishes exactly (lattice points of the saturated
    // strip) is a zero as well.
    if (r.value.is_zero())
      rec.near_zero = true;
    else if (rec.log_exact && !rec.log_exact->is_zero())
      rec.near_zero = rec.log_exact->log_mod() < r.log_envelope - kNearZeroFloor;
  } catch (const std::exception& e) {
    rec.asym_error = e.what();
    try {
      rec.region = asym::classify(n, a, zp, params).tag;
    } catch (const std::exception&) {
    }
  }
  if (rec.log_exact && rec.log_asym) {
    if (rec.log_exact->is_zero())
      rec.exact_error = "exact value is zero; relative error undefined";
    else
      rec.rel_err = abs(mp::ratio_minus_one(*rec.log_asym, *rec.log_exact));
  }
  return rec;
}

std::vector<EvalRecord> compare_sweep(const std::vector<long>& n_list, const Real& alpha, const std::vector<Complex>& points,
                                      const Params& params, Precision prec, int threads) {
  params.validate();
  const long np = static_cast<long>(points.size());
  const long total = static_cast<long>(n_list.size()) * np;
  std::vector<std::optional<EvalRecord>> slots(static_cast<size_t>(total));
  int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nt) if (nt > 1)
  for (long i = 0; i < total; ++i) {
    long n = n_list[static_cast<size_t>(i / np)];
    slots[static_cast<size_t>(i)] = compare_point(n, alpha, points[static_cast<size_t>(i % np)], params, prec);
  }
  std::vector<EvalRecord> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

// ------------------------------------------------------------------ grids

GridSpec parse_grid(const std::string& text) {
  auto fail = [&text]() -> ConfigError { return ConfigError("bad grid '" + text + "': expected re0:re1:nre,im0:im1:nim"); };
  auto comma = text.find(',');
  if (comma == std::string::npos) throw fail();
  auto axis = [&](const std::string& part, double& lo, double& hi, long& count) {
    std::istringstream in(part);
    char c1 = 0, c2 = 0;
    if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':') throw fail();
    in >> std::ws;
    if (!in.eof()) throw fail();
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw fail();
    if (count < 1) throw ConfigError("grid point counts must be >= 1");
    if (count == 1 && lo != hi) throw ConfigError("a grid axis with one point needs equal endpoints");
  };
  GridSpec g{};
  axis(text.substr(0, comma), g.re0, g.re1, g.nre);
  axis(text.substr(comma + 1), g.im0, g.im1, g.nim);
  return g;
}

std::vector<Complex> grid_points(const GridSpec& g, Precision prec) {
  auto at = [](double lo, double hi, long k, long count) {
    return count == 1 ? lo : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  };
  std::vector<Complex> pts;
  for (long i = 0; i < g.nre; ++i)
    for (long j = 0; j < g.nim; ++j) pts.emplace_back(at(g.re0, g.re1, i, g.nre), at(g.im0, g.im1, j, g.nim), prec);
  return pts;
}

std::vector<Complex> default_region_grid(Region r, long n, const Real& alpha, const Params& params, Precision prec) {
  params.validate();
  const double d = params.delta, e = params.epsilon;
  auto margin = [e](double lo, double hi) { return std::min(2 * e, (hi - lo) / 4); };
  double kn = std::sqrt(static_cast<double>(n) / alpha.to_double()) + d;
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  switch (r) {
    case Region::Origin: x0 = 0; x1 = e / std::sqrt(2.0); y0 = 0; y1 = x1; break;
    case Region::C: x0 = 2 - e / std::sqrt(2.0); x1 = 2 + e / std::sqrt(2.0); y0 = 0; y1 = e / std::sqrt(2.0); break;
    case Region::B: x0 = e; x1 = 2 - e; y0 = 0; y1 = d; break;
    case Region::D: x0 = 2 + e; x1 = std::max(kn, 2 + 2 * e); y0 = 0; y1 = d; break;
    case Region::A: x0 = 0; x1 = 4; y0 = d; y1 = d + 3; break;
  }
  // The real axis is a symmetry line, not a region boundary; keep off it
  // by a small relative amount only.
  double mx = margin(x0, x1), my = margin(y0, y1);
  double gx0 = x0 + (r == Region::A ? 0 : mx), gx1 = x1 - (r == Region::A ? 0 : mx);
  double gy0 = y0 == 0 ? (y1 - y0) / 20 : y0 + my, gy1 = r == Region::A ? y1 : y1 - my;
  GridSpec g{gx0, gx1, 20, gy0, gy1, 10};
  std::vector<Complex> out;
  for (auto& z : grid_points(g, prec))
    if (asym::classify_region(n, alpha, z, params) == r) out.push_back(std::move(z));
  return out;
}

Real nu(long n, const Real& alpha) { return Real(n, alpha.precision()) + alpha * 2.0 - 0.5; }

// -------------------------------------------------------------- fits

ConvergenceFit convergence_fit(const Real& alpha, const Complex& z, const std::vector<long>& n_list, const Params& params,
                               Precision prec) {
  if (n_list.size() < 4) throw ConfigError("convergence fit needs at least 4 degrees");
  for (long n : n_list)
    if (n < 1) throw ConfigError("degrees must be >= 1");
  double ratio = static_cast<double>(n_list[1]) / static_cast<double>(n_list[0]);
  if (!(ratio > 1)) throw ConfigError("degree list must be increasing");
  for (size_t i = 1; i < n_list.size(); ++i) {
    double r = static_cast<double>(n_list[i]) / static_cast<double>(n_list[i - 1]);
    if (std::abs(r - ratio) > 1e-9 * ratio) throw ConfigError("degree list must be geometric");
  }
  ConvergenceFit fit{z, asym::classify(n_list.front(), alpha, z, params).tag, n_list, {}, 0, 0, 0, false, {}};
  for (long n : n_list) {
    EvalRecord rec = compare_point(n, alpha, z, params, prec);
    if (!rec.ok()) throw FitError("fit point n=" + std::to_string(n) + " failed: " + rec.error());
    if (rec.near_zero) throw FitError("fit point n=" + std::to_string(n) + " is near a zero of the polynomial");
    double e = rec.rel_err->to_double();
    if (!(e > 0) || !std::isfinite(e)) throw FitError("degenerate relative error at n=" + std::to_string(n));
    if (rec.asym_flags.find("dropped_term_dominant") != std::string::npos) fit.flagged = true;
    fit.rel_errs.push_back(e);
    fit.records.push_back(std::move(rec));
  }
  // Least squares for log e = log C - p log n.
  const double m = static_cast<double>(n_list.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n_list.size(); ++i) {
    double x = std::log(static_cast<double>(n_list[i])), y = std::log(fit.rel_errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  double icpt = (sy - slope * sx) / m;
  double ss = 0;
  for (size_t i = 0; i < n_list.size(); ++i) {
    double r = std::log(fit.rel_errs[i]) - (icpt + slope * std::log(static_cast<double>(n_list[i])));
    ss += r * r;
  }
  fit.order = -slope;
  fit.constant = std::exp(icpt);
  fit.residual = std::sqrt(ss / m);
  return fit;
}

// ------------------------------------------------------------- Darboux

DarbouxReport darboux_check(const Real& alpha, const Real& x, const std::vector<long>& n_list, Precision prec) {
  Real a(alpha, prec), xr(x, prec);
  if (!(abs(xr) > 1.0)) throw DomainError("Darboux limit needs real |x| > 1");
  Real s = Real(1.0, prec) / (xr * xr);  // 1/x^2
  // Gamma(alpha - 1/x^2) in log form (throws PoleError at poles).
  LogComplex lg = specfun::log_gamma_complex(Complex(a - s), prec);
  DarbouxReport rep{a, xr, {}, true};
  Complex xc(xr, Real(prec));
  for (long n : n_list) {
    if (n < 1) throw ConfigError("degrees must be >= 1");
    Real nr(n, prec);
    LogComplex f = exact::eval_f(n, a, xc, prec);
    // x^n n^(alpha - 1/x^2 - 1) e^(1/x^2) / Gamma(alpha - 1/x^2).
    Real lm = nr * log(abs(xr)) + (a - s - 1.0) * log(nr) + s;
    LogComplex approx = (LogComplex(lm, Real(prec)) / lg).times_sign(xr.sign() < 0 ? n : 0);
    double e1 = abs(mp::ratio_minus_one(approx, f)).to_double();
    // Region-D route: f_n(x) ~ gamma_n * pi_n(x) with pi_n from the formula
    // at z = sqrt(n) x.
    Complex z(sqrt(nr) * xr, Real(prec));
    double e2 = std::numeric_limits<double>::quiet_NaN();
    asym::AsymResult d = asym::eval_in_region(Region::D, n, a, z);
    if (!d.value.is_zero()) {
      LogComplex via_d = d.value * LogComplex(exact::log_leading_coeff(n, a), Real(prec));
      e2 = abs(mp::ratio_minus_one(via_d, f)).to_double();
    }
    if (!rep.rows.empty() && !(e1 < rep.rows.back().rel_err)) rep.decreasing = false;
    rep.rows.push_back({n, e1, e2});
  }
  return rep;
}

// ---------------------------------------------------- boundary agreement

BoundaryReport boundary_consistency(long n, const Real& alpha, const Params& params, Precision prec) {
  params.validate();
  Real a(alpha, prec);
  const double d = params.delta, e = params.epsilon;
  const double kn = std::sqrt(static_cast<double>(n) / a.to_double()) + d;
  const double pi = std::acos(-1.0);
  constexpr int kPoints = 10;
  BoundaryReport rep{n, {}};
  auto line = [&](Region r1, Region r2, const std::string& what, double x0, double x1, double y) {
    BoundaryPair bp{r1, r2, what, {}, {}, 0};
    for (int k = 0; k < kPoints; ++k) bp.points.emplace_back(x0 + (x1 - x0) * (k + 0.5) / kPoints, y, prec);
    rep.pairs.push_back(std::move(bp));
  };
  auto arc = [&](Region r1, Region r2, const std::string& what, double cx, double t0, double t1) {
    BoundaryPair bp{r1, r2, what, {}, {}, 0};
    for (int k = 0; k < kPoints; ++k) {
      double t = t0 + (t1 - t0) * (k + 0.5) / kPoints;
      bp.points.emplace_back(cx + e * std::cos(t), e * std::sin(t), prec);
    }
    rep.pairs.push_back(std::move(bp));
  };
  line(Region::A, Region::B, "Im z = delta, eps <= Re z <= 2 - eps", e, 2 - e, d);
  if (kn > 2 + e) line(Region::A, Region::D, "Im z = delta, 2 + eps <= Re z <= k_n", 2 + e, kn, d);
  // Arc angles keep a margin of 0.1 rad from the real axis.
  arc(Region::B, Region::C, "|z - 2| = eps, band side", 2, pi - 1.2, pi - 0.1);
  arc(Region::C, Region::D, "|z - 2| = eps, saturated side", 2, 0.1, 1.2);
  arc(Region::A, Region::C, "|z - 2| = eps, top arc", 2, 1.2, pi - 1.2);
  arc(Region::Origin, Region::B, "|z| = eps, near the band", 0, 0.1, 0.7);
  arc(Region::Origin, Region::A, "|z| = eps, near the imaginary axis", 0, 0.7, pi / 2);
  for (auto& bp : rep.pairs) {
    for (const auto& z : bp.points) {
      double lr = log_ratio(asym::eval_in_region(bp.first, n, a, z).value, asym::eval_in_region(bp.second, n, a, z).value);
      bp.log_ratios.push_back(lr);
      bp.max_log_ratio = std::max(bp.max_log_ratio, lr);
    }
  }
  return rep;
}

// ---------------------------------------------------------- orthogonality

OrthoReport ortho_report(const Real& alpha, long max_deg, long k_max, Precision prec, bool serial) {
  if (max_deg < 0 || max_deg > 10) throw ConfigError("max_deg must be in [0, 10]");
  Real a(alpha, prec);
  auto mat = serial ? exact::ortho_matrix_serial(max_deg, a, k_max, prec) : exact::ortho_matrix(max_deg, a, k_max, prec);
  OrthoReport rep{a, max_deg, k_max, {}, true, true};
  for (long m = 0; m <= max_deg; ++m)
    for (long n = 0; n <= max_deg; ++n) {
      const auto& s = mat[static_cast<size_t>(m)][static_cast<size_t>(n)];
      Real expected = m == n ? exact::h_norm(n, a) : Real(prec);
      Real dev = abs(s.value - expected);
      OrthoEntry ent{m, n, s.value, s.tail_bound, expected, dev, dev <= s.tail_bound, s.value.is_zero()};
      if (!ent.within_bound) rep.all_within = false;
      if ((m + n) % 2 == 1 && !ent.exact_zero) rep.odd_exact_zero = false;
      rep.entries.push_back(std::move(ent));
    }
  return rep;
}

}  // namespace tricomi::harness
