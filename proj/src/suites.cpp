#include "tricomi/suites.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "tricomi/asym.hpp"
#include "tricomi/auxfun.hpp"
#include "tricomi/harness.hpp"
#include "tricomi/specfun.hpp"

namespace tricomi::suites {

using mp::Complex;
using mp::LogComplex;
using mp::Precision;
using mp::Real;
using mp::Side;

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Complex cplx(double re, double im, Precision p) { return Complex(Real(re, p), Real(im, p)); }

double rel(const LogComplex& a, const LogComplex& b) { return abs(mp::ratio_minus_one(a, b)).to_double(); }

// The five interior points of the convergence criterion.
struct FitPoint {
  const char* name;
  const char* re;
  const char* im;
};
constexpr FitPoint kFitPoints[] = {
    {"A", "1", "2"}, {"B", "1", "0.05"}, {"C", "2.05", "0.02"}, {"D", "4", "0.05"}, {"Origin", "0.05", "0.05"}};
const std::vector<long> kFitDegrees = {100, 200, 400, 800};

// ---------------------------------------------------------------- 1

SuiteResult orthogonality() {
  // alpha = 1, m, n <= 4, k_max = 1e5 at 128 bits; at most two minutes.
  auto t0 = std::chrono::steady_clock::now();
  harness::OrthoReport r = harness::ortho_report(Real(1.0, Precision(128)), 4, 100000, Precision(128));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double worst = 0;
  for (const auto& e : r.entries)
    if (!e.tail_bound.is_zero()) worst = std::max(worst, (e.deviation / e.tail_bound).to_double());
  SuiteResult out{1, "Orthogonality", r.all_within && r.odd_exact_zero && secs <= 120.0, "", 0};
  char ratio[32];
  std::snprintf(ratio, sizeof ratio, "%.6f", worst);
  out.detail = "max |sum - h_n delta|/tail_bound = " + std::string(ratio) + " (<= 1), m+n odd exactly 0: " + (r.odd_exact_zero ? "yes" : "no") +
               ", kernel time " + sci(secs) + " s (<= 120)";
  return out;
}

// ---------------------------------------------------------------- 2

SuiteResult constants() {
  Precision p(256);
  // l = 1 from 2 (log z + phi_tilde(z)) at |z| = 1e6, tolerance 1e-6.
  double worst_l = 0;
  for (double t : {0.0, 0.5, 1.5, 2.5, -0.8, -2.9}) {
    Complex z = cplx(1e6 * std::cos(t), 1e6 * std::sin(t), p);
    Complex l = (mp::log(z) + aux::phi_tilde(z)) * 2.0;
    worst_l = std::max(worst_l, abs(l - 1.0).to_double());
  }
  // psi(3) = 2/27 to full precision.
  double e3 = (abs(aux::density_psi(Real(3.0, p)) - Real(2.0, p) / 27.0) * 27.0 / 2.0).to_double();
  // Continuity at 2: both branches meet at 1/4. The band branch has a
  // square-root cusp, so it is probed at a distance whose root is below the
  // tolerance.
  double e2 = 0;
  for (const Real& x : {Real(2.0, p), Real(2.0, p) + Real("1e-15", p), Real(2.0, p) - Real("1e-30", p)})
    e2 = std::max(e2, abs(aux::density_psi(x) - 0.25).to_double());
  // Unit mass: adaptive Gauss-Kronrod over the band and the (infinite) tails.
  auto f = [](double x) { return aux::density_psi(Real(x, Precision(128))).to_double(); };
  using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
  double band = GK::integrate(f, 0.0, 2.0, 15, 1e-14);
  double tail = GK::integrate(f, 2.0, std::numeric_limits<double>::infinity(), 15, 1e-14);
  double em = std::abs(2.0 * (band + tail) - 1.0);
  bool pass = worst_l <= 1e-6 && e3 <= 1e-70 && e2 <= 1e-12 && em <= 1e-8;
  return {2, "Constants", pass,
          "|l - 1| = " + sci(worst_l) + " (<= 1e-6), psi(3) rel err " + sci(e3) + " (<= 1e-70), |psi - 1/4| at 2 = " + sci(e2) +
              " (<= 1e-12), |int psi - 1| = " + sci(em) + " (<= 1e-8)",
          0};
}

// ---------------------------------------------------------------- 3

SuiteResult identities() {
  const Precision p(128);
  const double tol = 1e-20;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> u(-3.0, 3.0), ua(0.2, 3.0);
  double d_worst = 0, prop_worst = 0;
  int used = 0;
  while (used < 50) {
    Complex z = cplx(u(rng), u(rng), p);
    // Off every cut (real axis, and the imaginary axis used by D-hat's branch).
    if (std::abs(z.im().to_double()) < 0.05 || std::abs(z.re().to_double()) < 0.05) continue;
    ++used;
    Real al(ua(rng), p);
    long n = 10 + used;
    aux::DTriple t = aux::d_triple(n, al, z);
    aux::ThetaGammaPi th = aux::theta_gamma_pi(n, al, z);
    double sgn = z.im().sign() > 0 ? 1.0 : -1.0;
    Complex two_i_theta = mp::times_i(th.theta) * 2.0;
    Complex e_pm = mp::exp(two_i_theta * sgn), e_mp = mp::exp(two_i_theta * -sgn);
    d_worst = std::max(d_worst, rel(t.d_tilde, t.d * LogComplex::from_complex(1.0 - e_mp)));
    d_worst = std::max(d_worst, rel(t.d_hat, t.d * LogComplex::from_complex(1.0 - e_pm)));
    // Connection formulas between phi, phi-tilde and phi-hat.
    Complex i_pi(Real(p), Real::pi(p) * sgn);
    Complex ph = aux::phi(z).value;
    Complex r1 = aux::phi_tilde(z) - ph - i_pi / (z * z);
    Complex r2 = aux::phi_hat(z) - ph + i_pi * (1.0 / (z * z) - 1.0);
    prop_worst = std::max({prop_worst, abs(r1).to_double(), abs(r2).to_double()});
  }
  // Airy: Ai(z) + w Ai(wz) + w^2 Ai(w^2 z) = 0, and Wronskian 1/pi, relative
  // to the size of the terms.
  Real pi = Real::pi(p);
  Complex w(cos(pi * 2.0 / 3.0), sin(pi * 2.0 / 3.0));
  double conn_worst = 0, wr_worst = 0;
  std::uniform_real_distribution<double> ur(0.0, 20.0), ut(-3.14159, 3.14159);
  Complex inv_pi(1.0 / pi);
  for (int i = 0; i < 50; ++i) {
    double rr = ur(rng), tt = ut(rng);
    Complex z = cplx(rr * std::cos(tt), rr * std::sin(tt), p);
    auto q0 = specfun::airy_quartet(z, p), q1 = specfun::airy_quartet(w * z, p), q2 = specfun::airy_quartet(w * w * z, p);
    Complex s = q0.ai + w * q1.ai + w * w * q2.ai;
    Real scale = max(max(abs(q0.ai), abs(q1.ai)), abs(q2.ai));
    conn_worst = std::max(conn_worst, (abs(s) / scale).to_double());
    Complex wr = q0.ai * q0.bi_d - q0.ai_d * q0.bi;
    Real wscale = max(abs(q0.ai * q0.bi_d) + abs(q0.ai_d * q0.bi), abs(inv_pi));
    wr_worst = std::max(wr_worst, (abs(wr - inv_pi) / wscale).to_double());
  }
  bool pass = d_worst <= tol && prop_worst <= tol && conn_worst <= tol && wr_worst <= tol;
  return {3, "Identity suite", pass,
          "D-tilde/D-hat " + sci(d_worst) + ", phi connections " + sci(prop_worst) + ", Airy connection " + sci(conn_worst) +
              ", Wronskian " + sci(wr_worst) + " (each <= 1e-20, 128 bits, 50 points)",
          0};
}

// ------------------------------------------------------------- 4 and 9

struct FitTable {
  std::vector<harness::ConvergenceFit> fits;
};

FitTable fit_table(Precision p) {
  FitTable t;
  Real a(1.0, p);
  for (const auto& fp : kFitPoints)
    t.fits.push_back(harness::convergence_fit(a, Complex(Real(fp.re, p), Real(fp.im, p)), kFitDegrees, asym::Params{}, p));
  return t;
}

SuiteResult convergence() {
  auto t0 = std::chrono::steady_clock::now();
  FitTable t = fit_table(Precision(256));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool pass = secs <= 300.0;
  std::ostringstream d;
  d << "orders";
  for (size_t i = 0; i < t.fits.size(); ++i) {
    double o = t.fits[i].order;
    pass = pass && o >= 0.8 && o <= 1.2 && t.fits[i].region == std::vector<asym::Region>{asym::Region::A, asym::Region::B, asym::Region::C,
                                                                                           asym::Region::D, asym::Region::Origin}[i];
    char buf[48];
    std::snprintf(buf, sizeof buf, " %s=%.4f", kFitPoints[i].name, o);
    d << buf;
  }
  d << " (each in [0.8, 1.2]), " << sci(secs) << " s (<= 300)";
  return {4, "Convergence order", pass, d.str(), 0};
}

SuiteResult precision_robustness() {
  FitTable lo = fit_table(Precision(128));
  FitTable hi = fit_table(Precision(256));
  double worst = 0;
  for (size_t i = 0; i < lo.fits.size(); ++i)
    for (size_t k = 0; k < kFitDegrees.size(); ++k) {
      // Compare the rel_err values at full precision, not as doubles.
      Real a(*lo.fits[i].records[k].rel_err, Precision(256));
      worst = std::max(worst, abs(a - *hi.fits[i].records[k].rel_err).to_double());
    }
  return {9, "Precision robustness", worst < 1e-20, "max |rel_err(128) - rel_err(256)| = " + sci(worst) + " over 20 entries (< 1e-20)", 0};
}

// ---------------------------------------------------------------- 5

SuiteResult turning_point() {
  Precision p(256);
  Real a(1.0, p);
  Complex two = cplx(2.0, 0.0, p);
  std::vector<double> errs;
  bool finite = true;
  for (long n : kFitDegrees) {
    asym::AsymResult r = asym::eval_C(n, a, two);
    finite = finite && r.value.log_mod().is_finite();
    errs.push_back(rel(r.value, exact::eval_monic_rescaled(n, a, two, p)));
  }
  bool decreasing = true;
  for (size_t i = 1; i < errs.size(); ++i) decreasing = decreasing && errs[i] < errs[i - 1];
  double e400 = errs[2];
  std::ostringstream d;
  d << "finite: " << (finite ? "yes" : "no") << ", rel_err at z=2 for n=100..800:";
  for (double e : errs) d << ' ' << sci(e);
  d << " (n=400 <= 0.1, strictly decreasing)";
  return {5, "Turning point", finite && e400 <= 0.1 && decreasing, d.str(), 0};
}

// ---------------------------------------------------------------- 6

SuiteResult darboux() {
  Precision p(256);
  harness::DarbouxReport r = harness::darboux_check(Real(1.0, p), Real(1.5, p), kFitDegrees, p);
  std::ostringstream d;
  d << "rel_err for n=100..800:";
  for (const auto& row : r.rows) d << ' ' << sci(row.rel_err);
  d << " (strictly decreasing)";
  return {6, "Darboux limit", r.decreasing, d.str(), 0};
}

// ---------------------------------------------------------------- 7

SuiteResult symmetry() {
  Precision p(128);
  Real a(1.0, p);
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> ux(-6.0, 6.0), uy(-3.0, 3.0);
  std::uniform_int_distribution<long> un(1, 600);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    Complex z = cplx(ux(rng), uy(rng), p);
    long n = un(rng);
    LogComplex v = asym::eval_asym(n, a, z).value;
    if (!mp::same_value_bits(asym::eval_asym(n, a, -z).value, v.times_sign(n))) ++bad;
    if (!mp::same_value_bits(asym::eval_asym(n, a, mp::conj(z)).value, v.conj())) ++bad;
    if (!mp::same_value_bits(asym::eval_asym(n, a, -mp::conj(z)).value, v.conj().times_sign(n))) ++bad;
  }
  return {7, "Symmetry suite", bad == 0, std::to_string(bad) + " of 300 parity/conjugation/composite identities differ in any bit (0 allowed)", 0};
}

// ---------------------------------------------------------------- 8

SuiteResult cross_region() {
  Precision p(256);
  Real a(1.0, p);
  harness::BoundaryReport b4 = harness::boundary_consistency(400, a, asym::Params{}, p);
  harness::BoundaryReport b8 = harness::boundary_consistency(800, a, asym::Params{}, p);
  bool pass = b4.pairs.size() == b8.pairs.size();
  std::ostringstream d;
  for (size_t i = 0; pass && i < b4.pairs.size(); ++i) {
    const auto& p4 = b4.pairs[i];
    double m4 = p4.max_log_ratio, m8 = b8.pairs[i].max_log_ratio;
    d << asym::region_name(p4.first) << '|' << asym::region_name(p4.second) << ' ';
    // Pairs whose formulas coincide algebraically agree to rounding at both
    // degrees; every other pair must at least shrink by 0.6 when n doubles.
    if (m4 <= 1e-30 && m8 <= 1e-30) {
      d << "identical; ";
      continue;
    }
    bool ok = m4 <= 10.0 / 400 && m8 <= 0.6 * m4;
    pass = pass && ok;
    d << sci(m4) << "->" << sci(m8) << "; ";
  }
  d << "(max |log ratio| at n=400 -> 800; need <= 10/n at 400 and ratio <= 0.6)";
  return {8, "Cross-region consistency", pass, d.str(), 0};
}

}  // namespace

std::vector<Suite> acceptance_suites() {
  return {{1, "Orthogonality", orthogonality},
          {2, "Constants", constants},
          {3, "Identity suite", identities},
          {4, "Convergence order", convergence},
          {5, "Turning point", turning_point},
          {6, "Darboux limit", darboux},
          {7, "Symmetry suite", symmetry},
          {8, "Cross-region consistency", cross_region},
          {9, "Precision robustness", precision_robustness}};
}

SuiteResult run_suite(const Suite& s) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteResult r{s.id, s.name, false, "", 0};
  try {
    r = s.run();
  } catch (const std::exception& e) {
    r = {s.id, s.name, false, std::string("exception: ") + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string format_line(const SuiteResult& r) {
  char head[128];
  std::snprintf(head, sizeof head, "%s  [%d] %s (%.1f s): ", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace tricomi::suites
