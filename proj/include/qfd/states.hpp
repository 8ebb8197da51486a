#pragma once

#include <cmath>
#include <tuple>
#include <utility>
#include <vector>

#include "qfd/fock.hpp"
#include "qfd/matrix.hpp"

namespace qfd {

struct BlochVector {
  double r1 = 0, r2 = 0, r3 = 0;
  double norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }
};

/// Unit-trace Hermitian operator. Positivity is guaranteed by the
/// constructors in this header; validate_density() checks it explicitly.
class DensityMatrix {
 public:
  explicit DensityMatrix(HermitianOperator op, const Tolerances& tol = {})
      : op_(std::move(op)) {
    double tr = op_.mat().trace().real();
    if (std::abs(tr - 1.0) > tol.trace)
      throw Error("density matrix trace " + std::to_string(tr) + " is not 1");
  }

  explicit DensityMatrix(ComplexMatrix mat, const Tolerances& tol = {})
      : DensityMatrix(HermitianOperator(std::move(mat), tol), tol) {}

  const ComplexMatrix& mat() const { return op_.mat(); }
  const HermitianOperator& op() const { return op_; }
  Eigen::Index dim() const { return op_.dim(); }

 private:
  HermitianOperator op_;
};

/// Full invariant check (trace, Hermiticity, spectrum floor). Used by the
/// test suite; constructors keep the cheap checks only.
inline void validate_density(const DensityMatrix& rho, const Tolerances& tol = {}) {
  Spectrum s = eig_hermitian(rho.op());
  if (s.eigenvalues.minCoeff() < -tol.psd_clip)
    throw NotPSD("density eigenvalue " + std::to_string(s.eigenvalues.minCoeff()));
}

/// rho = (1 + r . sigma) / 2 with eigenvalues (1 +- |r|)/2.
inline DensityMatrix qubit_from_bloch(const BlochVector& r, const Tolerances& tol = {}) {
  if (r.norm() > 1.0 + 1e-12)
    throw BlochOutOfBall("Bloch vector norm " + std::to_string(r.norm()));
  ComplexMatrix m(2, 2);
  m << 0.5 * (1 + r.r3), 0.5 * Complex(r.r1, -r.r2), 0.5 * Complex(r.r1, r.r2), 0.5 * (1 - r.r3);
  return DensityMatrix(std::move(m), tol);
}

inline void require_probability_vector(const std::vector<double>& w, const Tolerances& tol) {
  double sum = 0;
  for (double x : w) {
    if (x < -tol.weight) throw WeightNotNormalized("negative weight " + std::to_string(x));
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol.weight)
    throw WeightNotNormalized("weights sum to " + std::to_string(sum));
}

/// Fock-diagonal mixture sum_n w_n |n><n|.
inline DensityMatrix fock_diagonal(const std::vector<double>& weights, const FockConfig& cfg,
                                   const Tolerances& tol = {}) {
  cfg.validate();
  if (weights.empty() || weights.size() > static_cast<std::size_t>(cfg.dim))
    throw LevelOutOfRange("weight vector length " + std::to_string(weights.size()) +
                          " exceeds truncation dim " + std::to_string(cfg.dim));
  require_probability_vector(weights, tol);
  ComplexMatrix m = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  double sum = 0;
  for (std::size_t n = 0; n < weights.size(); ++n) sum += weights[n];
  for (std::size_t n = 0; n < weights.size(); ++n)
    m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = std::max(weights[n], 0.0) / sum;
  return DensityMatrix(std::move(m), tol);
}

namespace detail {

inline DensityMatrix diagonal_from_unnormalized(std::vector<double> w, double tail_mass,
                                                bool renormalize, const FockConfig& cfg,
                                                const Tolerances& tol) {
  if (!renormalize && tail_mass > tol.thermal_tail)
    throw TailTooHeavy("truncated tail mass " + std::to_string(tail_mass) +
                       " exceeds " + std::to_string(tol.thermal_tail) +
                       "; raise dim or pass renormalize");
  double sum = 0;
  for (double x : w) sum += x;
  ComplexMatrix m = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  for (std::size_t n = 0; n < w.size(); ++n)
    m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n)) = w[n] / sum;
  return DensityMatrix(std::move(m), tol);
}

}  // namespace detail

/// Thermal state tau_lambda = (1-lambda) sum lambda^n |n><n| on the cutoff,
/// renormalized to unit trace.
inline DensityMatrix thermal(double lambda, const FockConfig& cfg, bool renormalize = true,
                             const Tolerances& tol = {}) {
  cfg.validate();
  if (lambda < 0 || lambda >= 1)
    throw ParamOutOfDomain("thermal: lambda must be in [0,1), got " + std::to_string(lambda));
  std::vector<double> w(static_cast<std::size_t>(cfg.dim));
  double term = 1.0 - lambda;
  for (int n = 0; n < cfg.dim; ++n) {
    w[static_cast<std::size_t>(n)] = term;
    term *= lambda;
  }
  // Untruncated weights sum to 1, so the dropped tail is lambda^dim.
  double tail = std::pow(lambda, cfg.dim);
  return detail::diagonal_from_unnormalized(std::move(w), tail, renormalize, cfg, tol);
}

/// Thermal state with the vacuum removed: weights (1-lambda) lambda^{n-1}, n >= 1.
inline DensityMatrix truncated_thermal(double lambda, const FockConfig& cfg,
                                       bool renormalize = true, const Tolerances& tol = {}) {
  cfg.validate();
  if (lambda <= 0 || lambda >= 1)
    throw ParamOutOfDomain("truncated_thermal: lambda must be in (0,1), got " +
                           std::to_string(lambda));
  std::vector<double> w(static_cast<std::size_t>(cfg.dim), 0.0);
  double term = 1.0 - lambda;
  for (int n = 1; n < cfg.dim; ++n) {
    w[static_cast<std::size_t>(n)] = term;
    term *= lambda;
  }
  double tail = std::pow(lambda, cfg.dim - 1);
  return detail::diagonal_from_unnormalized(std::move(w), tail, renormalize, cfg, tol);
}

/// Photon-added thermal state: weights proportional to n lambda^n, n >= 1.
inline DensityMatrix photon_added_thermal(double lambda, const FockConfig& cfg,
                                          bool renormalize = true, const Tolerances& tol = {}) {
  cfg.validate();
  if (lambda <= 0 || lambda >= 1)
    throw ParamOutOfDomain("photon_added_thermal: lambda must be in (0,1), got " +
                           std::to_string(lambda));
  const double c = (1.0 - lambda) * (1.0 - lambda) / lambda;
  std::vector<double> w(static_cast<std::size_t>(cfg.dim), 0.0);
  for (int n = 1; n < cfg.dim; ++n)
    w[static_cast<std::size_t>(n)] = c * static_cast<double>(n) * std::pow(lambda, n);
  // Exact tail of the untruncated (unit-sum) weights beyond the cutoff.
  const int big_n = cfg.dim;
  double tail = std::pow(lambda, big_n - 1) * (big_n * (1.0 - lambda) + lambda);
  return detail::diagonal_from_unnormalized(std::move(w), tail, renormalize, cfg, tol);
}

/// p |psi_{m,n}><psi_{m,n}| + (1-p) |0><0| with |psi_{m,n}> = (|m>+|n>)/sqrt(2).
inline DensityMatrix superposition_mixture(double p, int m, int n, const FockConfig& cfg,
                                           const Tolerances& tol = {}) {
  cfg.validate();
  if (p < 0 || p > 1) throw ParamOutOfDomain("superposition_mixture: p must be in [0,1]");
  if (m == n) throw EqualLevels("superposition_mixture: m and n must differ");
  if (m < 0 || n < 0 || m >= cfg.dim || n >= cfg.dim)
    throw LevelOutOfRange("superposition_mixture: levels (" + std::to_string(m) + "," +
                          std::to_string(n) + ") outside 0.." + std::to_string(cfg.dim - 1));
  ComplexMatrix rho = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  rho(0, 0) += 1.0 - p;
  rho(m, m) += 0.5 * p;
  rho(n, n) += 0.5 * p;
  rho(m, n) += 0.5 * p;
  rho(n, m) += 0.5 * p;
  return DensityMatrix(std::move(rho), tol);
}

/// Gaussian state D_z S_zeta tau_lambda S_zeta^dag D_z^dag, re-Hermitized and
/// trace-renormalized to absorb rounding from the two conjugations.
inline DensityMatrix gaussian(double lambda, Complex zeta, Complex z, const FockConfig& cfg,
                              bool* truncation_warning = nullptr, const Tolerances& tol = {}) {
  DensityMatrix tau = thermal(lambda, cfg, true, tol);
  bool warn_d = false, warn_s = false;
  ComplexMatrix s = squeeze(zeta, cfg, &warn_s);
  ComplexMatrix d = displacement(z, cfg, &warn_d);
  if (truncation_warning) *truncation_warning = warn_d || warn_s;
  ComplexMatrix u = d * s;
  ComplexMatrix rho = u * tau.mat() * u.adjoint();
  rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
  rho /= rho.trace().real();
  return DensityMatrix(std::move(rho), tol);
}

/// Equal mixture of (|0>+|1>)/sqrt(2) and |2>: commutes with nothing of
/// interest yet carries zero Fisher discord relative to the number operator.
inline DensityMatrix counterexample_state(const FockConfig& cfg, const Tolerances& tol = {}) {
  if (cfg.dim < 3) throw LevelOutOfRange("counterexample_state needs dim >= 3");
  ComplexMatrix rho = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  rho(0, 0) = 0.25;
  rho(0, 1) = 0.25;
  rho(1, 0) = 0.25;
  rho(1, 1) = 0.25;
  rho(2, 2) = 0.5;
  return DensityMatrix(std::move(rho), tol);
}

/// Weighted direct sum: (sum_i p_i rho_i, sum_i (+) H_i) as block diagonals.
inline std::pair<DensityMatrix, HermitianOperator> direct_sum_weighted(
    const std::vector<std::tuple<double, DensityMatrix, HermitianOperator>>& blocks,
    const Tolerances& tol = {}) {
  if (blocks.empty()) throw DimensionMismatch("direct_sum_weighted: no blocks");
  double total = 0;
  for (const auto& [p, rho, h] : blocks) {
    if (p < 0) throw WeightNotNormalized("negative block weight " + std::to_string(p));
    if (rho.dim() != h.dim())
      throw DimensionMismatch("direct_sum_weighted: state/Hamiltonian dims differ");
    total += p;
  }
  if (std::abs(total - 1.0) > tol.weight)
    throw WeightNotNormalized("block weights sum to " + std::to_string(total));
  std::vector<ComplexMatrix> rho_blocks, h_blocks;
  rho_blocks.reserve(blocks.size());
  h_blocks.reserve(blocks.size());
  for (const auto& [p, rho, h] : blocks) {
    rho_blocks.push_back(p * rho.mat());
    h_blocks.push_back(h.mat());
  }
  ComplexMatrix rho_sum = direct_sum(rho_blocks);
  rho_sum /= rho_sum.trace().real();
  return {DensityMatrix(std::move(rho_sum), tol), HermitianOperator(direct_sum(h_blocks), tol)};
}

/// Partial trace of a bipartite density matrix; the result is renormalized
/// only through its exact unit trace (tracing preserves trace).
inline DensityMatrix partial_trace(const DensityMatrix& rho12, Eigen::Index d1, Eigen::Index d2,
                                   int keep, const Tolerances& tol = {}) {
  ComplexMatrix reduced = partial_trace(rho12.mat(), d1, d2, keep);
  reduced = 0.5 * (reduced + ComplexMatrix(reduced.adjoint()));
  return DensityMatrix(std::move(reduced), tol);
}

}  // namespace qfd
