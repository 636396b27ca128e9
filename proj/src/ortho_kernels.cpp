// Node-sum kernels for the discrete orthogonality check: an OpenMP version
// over fixed k-partitions and the plain serial reference.

#include <cmath>
#include <limits>

#include "tricomi/exact.hpp"

namespace tricomi::exact {

namespace {

// Fixed so the merge order, and therefore every rounding, is independent of
// the number of threads.
constexpr long kPartitions = 64;

using Matrix = std::vector<std::vector<Real>>;

Matrix zeros(long dim, Precision p) { return Matrix(static_cast<size_t>(dim), std::vector<Real>(static_cast<size_t>(dim), Real(p))); }

// f_0..f_d at x.
std::vector<Real> values_at(long d, const Real& alpha, const Real& x) {
  Precision p = x.precision();
  std::vector<Real> f;
  f.reserve(static_cast<size_t>(d) + 1);
  f.emplace_back(1.0, p);
  if (d >= 1) f.push_back(alpha * x);
  for (long k = 1; k < d; ++k) {
    Real next = ((alpha + Real(k, p)) * x * f[static_cast<size_t>(k)] - f[static_cast<size_t>(k - 1)]) / Real(k + 1, p);
    f.push_back(std::move(next));
  }
  return f;
}

void accumulate_node(long k, long d, const Real& alpha, Matrix& acc) {
  Precision p = alpha.precision();
  Real x = 1.0 / sqrt(Real(k, p) + alpha);
  Real mass = exp(log_mass(k, alpha));
  auto fp = values_at(d, alpha, x);
  auto fm = values_at(d, alpha, -x);
  for (long i = 0; i <= d; ++i) {
    for (long j = 0; j <= d; ++j) {
      auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
      Real plus = fp[ui] * fp[uj] * mass;
      Real minus = fm[ui] * fm[uj] * mass;
      acc[ui][uj] += plus + minus;
    }
  }
}

std::vector<std::vector<OrthoSum>> with_tail_bounds(const Matrix& sums, long d, const Real& alpha, long k_max) {
  Precision p = alpha.precision();
  // sum_{k>K} mass_k <= e^alpha / sqrt(2 pi) * 2 / sqrt(K), counted on both
  // signs of x; |f_m f_n| on |x| <= x_K is bounded by the majorants.
  long kk = std::max<long>(k_max, 1);
  Real x_k = 1.0 / sqrt(Real(kk, p) + alpha);
  Real c = exp(alpha) * 4.0 / sqrt(Real::pi(p) * 2.0) / sqrt(Real(kk, p));
  std::vector<Real> g;
  for (long i = 0; i <= d; ++i) g.push_back(majorant(i, alpha, x_k));
  std::vector<std::vector<OrthoSum>> out(static_cast<size_t>(d) + 1);
  for (long i = 0; i <= d; ++i)
    for (long j = 0; j <= d; ++j) {
      auto ui = static_cast<size_t>(i), uj = static_cast<size_t>(j);
      out[ui].push_back({sums[ui][uj], c * g[ui] * g[uj]});
    }
  return out;
}

void check_args(long max_deg, const Real& alpha, long k_max) {
  if (max_deg < 0) throw ConfigError("max_deg must be non-negative");
  if (k_max < 0) throw ConfigError("k_max must be non-negative");
  if (alpha.sign() <= 0) throw ConfigError("alpha must be positive");
}

}  // namespace

std::vector<std::vector<OrthoSum>> ortho_matrix(long max_deg, const Real& alpha, long k_max, Precision prec) {
  check_args(max_deg, alpha, k_max);
  Real a(alpha, prec);
  long dim = max_deg + 1;
  long total = k_max + 1;
  std::vector<Matrix> parts(static_cast<size_t>(kPartitions));
#pragma omp parallel for schedule(dynamic)
  for (long part = 0; part < kPartitions; ++part) {
    long lo = total * part / kPartitions;
    long hi = total * (part + 1) / kPartitions;
    Matrix acc = zeros(dim, prec);
    for (long k = lo; k < hi; ++k) accumulate_node(k, max_deg, a, acc);
    parts[static_cast<size_t>(part)] = std::move(acc);
  }
  Matrix sums = zeros(dim, prec);
  for (const auto& acc : parts)
    for (long i = 0; i < dim; ++i)
      for (long j = 0; j < dim; ++j) sums[static_cast<size_t>(i)][static_cast<size_t>(j)] += acc[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return with_tail_bounds(sums, max_deg, a, k_max);
}

std::vector<std::vector<OrthoSum>> ortho_matrix_serial(long max_deg, const Real& alpha, long k_max, Precision prec) {
  check_args(max_deg, alpha, k_max);
  Real a(alpha, prec);
  Matrix sums = zeros(max_deg + 1, prec);
  for (long k = 0; k <= k_max; ++k) accumulate_node(k, max_deg, a, sums);
  return with_tail_bounds(sums, max_deg, a, k_max);
}

}  // namespace tricomi::exact
