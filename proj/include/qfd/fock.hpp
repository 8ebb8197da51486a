#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qfd/matrix.hpp"

namespace qfd {

/// Truncation control for single-mode bosonic operators: matrices act on
/// Fock levels 0..dim-1, and scalar observables are converged by growing
/// dim geometrically up to max_dim.
struct FockConfig {
  int dim = 32;
  double conv_tol = 1e-8;
  int max_dim = 512;
  int growth = 2;

  void validate() const {
    if (dim < 2) throw ParamOutOfDomain("FockConfig: dim must be >= 2");
    if (max_dim < dim) throw ParamOutOfDomain("FockConfig: max_dim must be >= dim");
    if (!(conv_tol > 0)) throw ParamOutOfDomain("FockConfig: conv_tol must be > 0");
    if (growth < 2) throw ParamOutOfDomain("FockConfig: growth must be >= 2");
  }

  FockConfig at_dim(int d) const {
    FockConfig c = *this;
    c.dim = d;
    return c;
  }
};

inline double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  theta = std::fmod(theta, two_pi);
  if (theta < 0) theta += two_pi;
  return theta;
}

/// Truncated annihilation operator: <n-1|a|n> = sqrt(n).
inline ComplexMatrix annihilation(const FockConfig& cfg) {
  cfg.validate();
  ComplexMatrix a = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  for (int n = 1; n < cfg.dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

inline ComplexMatrix creation(const FockConfig& cfg) { return annihilation(cfg).adjoint(); }

/// Number operator diag(0, 1, ..., N-1).
inline HermitianOperator number_op(const FockConfig& cfg) {
  cfg.validate();
  ComplexMatrix n = ComplexMatrix::Zero(cfg.dim, cfg.dim);
  for (int k = 0; k < cfg.dim; ++k) n(k, k) = static_cast<double>(k);
  return HermitianOperator(std::move(n));
}

/// Rotated quadrature X_theta = e^{-i theta} a + e^{i theta} a^dag.
inline HermitianOperator quadrature(double theta, const FockConfig& cfg) {
  theta = wrap_angle(theta);
  ComplexMatrix a = annihilation(cfg);
  ComplexMatrix x = std::exp(Complex(0, -theta)) * a + std::exp(Complex(0, theta)) * ComplexMatrix(a.adjoint());
  return HermitianOperator(std::move(x));
}

/// Quadratic generator Lambda_theta = e^{-i theta} a^2 + e^{i theta} a^dag^2.
inline HermitianOperator quad_squared(double theta, const FockConfig& cfg) {
  theta = wrap_angle(theta);
  ComplexMatrix a = annihilation(cfg);
  ComplexMatrix a2 = a * a;
  ComplexMatrix m = std::exp(Complex(0, -theta)) * a2 + std::exp(Complex(0, theta)) * ComplexMatrix(a2.adjoint());
  return HermitianOperator(std::move(m));
}

/// e^{-i theta} a^l + e^{i theta} a^dag^l, coupling levels n and n + l.
inline HermitianOperator ladder_power(int l, double theta, const FockConfig& cfg) {
  cfg.validate();
  if (l < 1 || l >= cfg.dim)
    throw PowerExceedsTruncation("ladder power " + std::to_string(l) +
                                 " does not fit truncation dim " + std::to_string(cfg.dim));
  theta = wrap_angle(theta);
  ComplexMatrix a = annihilation(cfg);
  ComplexMatrix al = ComplexMatrix::Identity(cfg.dim, cfg.dim);
  for (int i = 0; i < l; ++i) al = al * a;
  ComplexMatrix m = std::exp(Complex(0, -theta)) * al + std::exp(Complex(0, theta)) * ComplexMatrix(al.adjoint());
  return HermitianOperator(std::move(m));
}

/// Displacement D_z = exp(z a^dag - z* a). Built by exponentiating the
/// truncated generator, so the result is exactly unitary at any dim; the
/// optional flag reports when |z|^2 is large enough that the truncated
/// operator differs appreciably from the infinite-dimensional one.
inline ComplexMatrix displacement(Complex z, const FockConfig& cfg,
                                  bool* truncation_warning = nullptr) {
  cfg.validate();
  if (truncation_warning) *truncation_warning = std::norm(z) > cfg.dim / 4.0;
  ComplexMatrix ad = creation(cfg);
  ComplexMatrix g = z * ad - std::conj(z) * ComplexMatrix(ad.adjoint());
  return unitary_from_generator(g);
}

/// Squeezing S_zeta = exp((zeta* a^2 - zeta a^dag^2)/2), same truncation
/// policy as displacement.
inline ComplexMatrix squeeze(Complex zeta, const FockConfig& cfg,
                             bool* truncation_warning = nullptr) {
  cfg.validate();
  if (truncation_warning)
    *truncation_warning = std::exp(2.0 * std::abs(zeta)) > cfg.dim / 4.0;
  ComplexMatrix a = annihilation(cfg);
  ComplexMatrix a2 = a * a;
  ComplexMatrix g = 0.5 * (std::conj(zeta) * a2 - zeta * ComplexMatrix(a2.adjoint()));
  return unitary_from_generator(g);
}

/// The dims visited when converging a truncated observable: dim, then
/// growth * dim, ..., capped at max_dim.
inline std::vector<int> truncation_ladder(const FockConfig& cfg) {
  cfg.validate();
  std::vector<int> dims{cfg.dim};
  int d = cfg.dim;
  while (d < cfg.max_dim) {
    d = std::min(cfg.max_dim, d * cfg.growth);
    dims.push_back(d);
  }
  return dims;
}

struct ConvergedValue {
  double value = 0;
  int used_dim = 0;
  bool converged = false;
};

/// Evaluate f on the truncation ladder until two successive values agree
/// to conv_tol (relative to max(1, |value|)). Non-convergence at max_dim
/// is reported through the flag, never thrown.
inline ConvergedValue converged_value(const std::function<double(const FockConfig&)>& f,
                                      const FockConfig& cfg) {
  ConvergedValue out;
  bool have_prev = false;
  double prev = 0;
  for (int d : truncation_ladder(cfg)) {
    out.value = f(cfg.at_dim(d));
    out.used_dim = d;
    if (have_prev && std::abs(out.value - prev) <= cfg.conv_tol * std::max(1.0, std::abs(out.value))) {
      out.converged = true;
      return out;
    }
    prev = out.value;
    have_prev = true;
  }
  return out;
}

}  // namespace qfd
