#pragma once

// Quantitative comparison of the exact and asymptotic paths: per-point error
// records, convergence-order fits, the fixed-x (Darboux) limit, agreement of
// adjacent region formulas on their shared boundaries, and orthogonality
// reports. Every function is deterministic in its inputs; sweeps run in
// parallel but return records in input order.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricomi/asym.hpp"
#include "tricomi/exact.hpp"

namespace tricomi::harness {

using asym::Params;
using asym::Region;
using mp::Complex;
using mp::LogComplex;
using mp::Precision;
using mp::Real;

/// A fit or report could not be formed from the data (zero or non-finite
/// errors, too few usable points).
class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Records whose exact value lies more than this far (natural log) below the
/// asymptotic formula's largest summand are tagged near-zero: the relative
/// error is ill-conditioned there.
inline constexpr double kNearZeroFloor = 2.302585092994046;  // log 10

struct EvalRecord {
  long n = 0;
  Real alpha;
  Complex z;
  std::optional<Region> region;
  std::optional<LogComplex> log_exact;
  std::optional<LogComplex> log_asym;
  /// |exp(log_asym - log_exact) - 1|, when both paths succeeded.
  std::optional<Real> rel_err;
  std::optional<Real> dropped_term_bound;
  std::string exact_error;  // empty on success
  std::string asym_error;   // empty on success
  bool near_zero = false;
  std::string asym_flags;  // AsymResult::flags()

  EvalRecord(long n_, Real alpha_, Complex z_) : n(n_), alpha(std::move(alpha_)), z(std::move(z_)) {}

  bool ok() const { return rel_err.has_value(); }
  /// asym flags plus "near_zero"; space separated.
  std::string flags() const;
  /// Per-path failure reasons, "exact: ...; asym: ..." or empty.
  std::string error() const;
};

/// Both paths at precision prec; failures are recorded, never thrown.
EvalRecord compare_point(long n, const Real& alpha, const Complex& z, const Params& params, Precision prec);

/// compare_point over every (n, z), n-major, in input order. threads <= 0
/// uses the OpenMP default.
std::vector<EvalRecord> compare_sweep(const std::vector<long>& n_list, const Real& alpha, const std::vector<Complex>& points,
                                      const Params& params, Precision prec, int threads = 1);

/// Inclusive linear grid re0..re1 (nre points) x im0..im1 (nim points),
/// real part varying slowest.
struct GridSpec {
  double re0, re1;
  long nre;
  double im0, im1;
  long nim;
};

/// Parses "re0:re1:nre,im0:im1:nim"; ConfigError on malformed input.
GridSpec parse_grid(const std::string& text);
std::vector<Complex> grid_points(const GridSpec& g, Precision prec);

/// Default interior grid of a region (first quadrant): 20 x 10 points on a
/// rectangle kept 2 eps (or a quarter of the extent, if smaller) away from
/// the region's boundaries; points the classifier assigns elsewhere are
/// dropped.
std::vector<Complex> default_region_grid(Region r, long n, const Real& alpha, const Params& params, Precision prec);

/// The shifted degree n + 2 alpha - 1/2 used by turning-point expansions in
/// the literature, for labelling Airy-region convergence tables.
Real nu(long n, const Real& alpha);

struct ConvergenceFit {
  Complex z;
  Region region;
  std::vector<long> n_list;
  std::vector<double> rel_errs;
  /// rel_err ~ constant * n^(-order), by least squares in log-log.
  double order = 0;
  double constant = 0;
  /// Root-mean-square residual of the log-log fit.
  double residual = 0;
  /// Some point's additive remainder is not below the 1/n level; the fit is
  /// reported but is not evidence about the formula.
  bool flagged = false;
  std::vector<EvalRecord> records;
};

/// Requires a geometric n_list of length >= 4 (ConfigError). FitError when a
/// point fails, is near a zero, or has a zero or non-finite error.
ConvergenceFit convergence_fit(const Real& alpha, const Complex& z, const std::vector<long>& n_list, const Params& params,
                               Precision prec);

struct DarbouxRow {
  long n;
  /// Relative error of x^n n^(alpha - 1/x^2 - 1) e^(1/x^2) / Gamma(alpha - 1/x^2)
  /// against f_n(x).
  double rel_err;
  /// Relative error of gamma_n * (region-D formula at z = sqrt(n) x) against
  /// the same f_n(x).
  double rel_err_region_d;
};

struct DarbouxReport {
  Real alpha;
  Real x;
  std::vector<DarbouxRow> rows;
  bool decreasing = false;  // rel_err strictly decreasing along n_list
};

/// Pre: x real with |x| > 1 (DomainError otherwise); PoleError when
/// alpha - 1/x^2 is a non-positive integer.
DarbouxReport darboux_check(const Real& alpha, const Real& x, const std::vector<long>& n_list, Precision prec);

struct BoundaryPair {
  Region first;
  Region second;
  std::string curve;  // description of the sampled curve
  std::vector<Complex> points;
  /// |log(first / second)| at each point, phase difference reduced mod 2 pi.
  std::vector<double> log_ratios;
  double max_log_ratio = 0;
};

struct BoundaryReport {
  long n;
  std::vector<BoundaryPair> pairs;
};

/// Ten points on each shared boundary curve of adjacent regions (upper half
/// plane, off the real axis):
///   A|B  on Im z = delta over the band,      A|D on Im z = delta over the saturated strip,
///   B|C  and C|D on the band / saturated sides of |z - 2| = eps, A|C on its top arc,
///   Origin|B and Origin|A on |z| = eps.
BoundaryReport boundary_consistency(long n, const Real& alpha, const Params& params, Precision prec);

/// |log(a / b)| with the phase difference reduced to (-pi, pi].
double log_ratio(const LogComplex& a, const LogComplex& b);

struct OrthoEntry {
  long m;
  long n;
  Real value;
  Real tail_bound;
  Real expected;   // h_n if m == n, else 0
  Real deviation;  // |value - expected|
  bool within_bound = false;
  bool exact_zero = false;  // value is exactly 0 (m + n odd)
};

struct OrthoReport {
  Real alpha;
  long max_deg;
  long k_max;
  std::vector<OrthoEntry> entries;  // row-major over (m, n)
  bool all_within = false;
  bool odd_exact_zero = false;  // every m + n odd entry is exactly 0
};

/// Pre: 0 <= max_deg <= 10 (ConfigError). Uses the parallel node kernel
/// unless serial is set.
OrthoReport ortho_report(const Real& alpha, long max_deg, long k_max, Precision prec, bool serial = false);

}  // namespace tricomi::harness
