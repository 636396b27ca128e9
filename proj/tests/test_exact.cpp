#include "doctest.h"
#include "test_util.hpp"
#include "tricomi/exact.hpp"

using namespace tricomi;
using namespace tricomi::mp;
using namespace tricomi::exact;
using testutil::C;
using testutil::phase_dist;
using testutil::rel_err;

namespace {
const Precision P128(128);
const Precision P256(256);

Complex real_c(double x, Precision p) { return Complex(Real(x, p)); }
}  // namespace

TEST_CASE("recurrence matches exact rational arithmetic") {
  // Values from tests/oracles/gen_exact.py (Fraction arithmetic).
  Real a1(1.0, P256);
  Complex x1(Real(1.0, P256) / 3.0);
  CHECK(rel_err(eval_f(10, a1, x1, P256).to_complex(), Complex(Real("0.000067392955124436605918087399568881050362531844013325", P256))) < 1e-45);
  Real a2(2.5, P256);
  CHECK(rel_err(eval_f(25, a2, real_c(-0.75, P256), P256).to_complex(),
                Complex(Real("-0.0014647433024513268076749989640724776862179328931602", P256))) < 1e-45);
  Real a3(0.5, P256);
  CHECK(rel_err(eval_f(3, a3, real_c(1.0, P256), P256).to_complex(), Complex(Real(-13.0, P256) / 48.0)) < 1e-70);
}

TEST_CASE("initial values and leading coefficient") {
  Real a(1.75, P128);
  Complex x = C("0.3", "-0.2", P128);
  CHECK(eval_f(0, a, x, P128).log_mod().is_zero());
  CHECK(rel_err(eval_f(1, a, x, P128).to_complex(), x * a) < 1e-35);
  // gamma_n is the coefficient of x^n: f_n(t) / t^n -> gamma_n for large t.
  Real big(1e30, P256);
  Real a256(1.75, P256);
  for (long n : {1L, 2L, 5L, 12L}) {
    LogComplex f = eval_f(n, a256, Complex(big), P256);
    Real lead = f.log_mod() - log(big) * Real(n, P256);
    CHECK(abs(lead - log_leading_coeff(n, a256)).to_double() < 1e-25);
  }
}

TEST_CASE("rescaled monic values against mpmath") {
  struct Row {
    long n;
    const char *alpha, *re, *im, *lmod, *lph;
  } rows[] = {
      {100, "1", "1", "2", "-118.76635145699787357262523126871847887799095400664", "-1.8197853930013655421778491954497151531421657704991"},
      {400, "2.5", "2.05", "0.02", "-1000.9129343161448667764206691915558208526394489334", "-0.86013594727461588180901393069723593049492331806006"},
      {800, "0.5", "0.05", "0.05", "-2261.1903853446035114279624728106120160201421211152", "-0.7774834724052474515100960530041426055715645984565"},
  };
  for (const auto& r : rows) {
    LogComplex v = eval_monic_rescaled(r.n, Real(r.alpha, P256), C(r.re, r.im, P256), P256);
    CAPTURE(r.n);
    CHECK(abs(v.log_mod() - Real(r.lmod, P256)).to_double() < 1e-40);
    CHECK(phase_dist(v.total_phase(), Real(r.lph, P256)) < 1e-40);
  }
}

TEST_CASE("symmetry f_n(-x) = (-1)^n f_n(x) holds bit-for-bit") {
  Real a(1.3, P128);
  Complex x = C("0.41", "0.17", P128);
  for (long n : {7L, 8L, 301L, 600L}) {
    LogComplex p = eval_f(n, a, x, P128);
    LogComplex m = eval_f(n, a, -x, P128);
    CHECK(same_value_bits(m, p.times_sign(n)));
  }
}

TEST_CASE("renormalization keeps huge degrees finite") {
  Real a(1.0, P128);
  LogComplex v = eval_f(5000, a, real_c(3.0, P128), P128);
  CHECK(v.log_mod().is_finite());
  CHECK(v.log_mod().to_double() > 1000.0);
}

TEST_CASE("weight w_d against mpmath") {
  LogComplex w = weight_wd(Real(1.0, P256), C("0.7", "0.2", P256), P256);
  CHECK(abs(w.log_mod() - Real("-0.90877072508643070496510298442779030388472321203294", P256)).to_double() < 1e-45);
  CHECK(phase_dist(w.total_phase(), Real("0.81196273842361801260672616514293888355176006033354", P256)) < 1e-45);
  LogComplex w2 = weight_wd(Real(1.5, P256), C("-0.9", "0.1", P256), P256);
  CHECK(abs(w2.log_mod() - Real("-0.18392589347776967985604452866817983716355835045009", P256)).to_double() < 1e-45);
  CHECK(phase_dist(w2.total_phase(), Real("-0.18992707986811493408291570403418567133307315240058", P256)) < 1e-45);
  // Positive on the real axis, even in z.
  LogComplex w3 = weight_wd(Real(1.0, P128), real_c(0.8, P128), P128);
  LogComplex w4 = weight_wd(Real(1.0, P128), real_c(-0.8, P128), P128);
  CHECK(phase_dist(w3.total_phase(), Real(0.0, P128)) < 1e-35);
  CHECK(identical(w3.log_mod(), w4.log_mod()));
  CHECK_THROWS_AS(weight_wd(Real(1.0, P128), C("0", "0.5", P128), P128), DomainError);
}

TEST_CASE("node masses") {
  Real a(1.0, P128);
  auto nm = nodes_masses(a, 3);
  REQUIRE(nm.size() == 4);
  // k = 0: alpha^-1; k = 1: e^-1; k = 2: 3 e^-2 / 2.
  CHECK(rel_err(nm[0].mass, Real(1.0, P128)) < 1e-35);
  CHECK(rel_err(nm[1].mass, exp(Real(-1.0, P128))) < 1e-35);
  CHECK(rel_err(nm[2].mass, exp(Real(-2.0, P128)) * 1.5) < 1e-35);
  CHECK(rel_err(nm[3].x, Real(0.5, P128)) < 1e-35);
}

TEST_CASE("total mass converges to h_0 = 2 e^alpha / alpha") {
  Real a(1.0, P128);
  auto g = ortho_matrix(1, a, 20000, P128);
  Real h0 = h_norm(0, a);
  Real gap = h0 - g[0][0].value;
  CHECK(gap.sign() > 0);
  CHECK(gap <= g[0][0].tail_bound);
  CHECK(g[0][1].value.is_zero());
}

TEST_CASE("parallel and serial kernels agree bit-for-bit") {
  Real a(0.75, P128);
  auto par = ortho_matrix(3, a, 3000, P128);
  auto ser = ortho_matrix_serial(3, a, 3000, P128);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      // Different summation order: agreement to rounding, not bits.
      CHECK(abs(par[i][j].value - ser[i][j].value).to_double() < 1e-30);
      CHECK(identical(par[i][j].tail_bound, ser[i][j].tail_bound));
    }
  // The parallel result is reproducible run to run.
  auto again = ortho_matrix(3, a, 3000, P128);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) CHECK(identical(par[i][j].value, again[i][j].value));
}

TEST_CASE("majorant bounds |f_n|") {
  Real a(2.0, P128);
  for (double x : {0.1, 0.5, 1.2}) {
    for (long n : {3L, 10L, 40L}) {
      Real fx = abs(eval_f(n, a, real_c(-x, P128), P128).to_complex());
      CHECK(fx <= majorant(n, a, Real(x, P128)));
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(eval_f(-1, Real(1.0, P128), real_c(0.1, P128), P128), ConfigError);
  CHECK_THROWS_AS(eval_f(3, Real(-1.0, P128), real_c(0.1, P128), P128), ConfigError);
  CHECK_THROWS_AS(nodes_masses(Real(1.0, P128), -1), ConfigError);
}
