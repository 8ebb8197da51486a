#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "qfd/states.hpp"

namespace qfd {

/// Default seed for the reproducible property suites.
inline constexpr std::uint64_t kDefaultSeed = 20250810;

/// Seeded source of random states and observables: spectra uniform on the
/// probability simplex, eigenvectors Haar-distributed (QR of a Ginibre
/// matrix with the R-diagonal phase fix).
class StateSampler {
 public:
  explicit StateSampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Complex gaussian_complex() { return Complex(normal_(rng_), normal_(rng_)); }

  RealVector simplex(int n) {
    RealVector w(n);
    double sum = 0;
    for (int i = 0; i < n; ++i) {
      w(i) = -std::log(std::uniform_real_distribution<double>(1e-300, 1.0)(rng_));
      sum += w(i);
    }
    return w / sum;
  }

  ComplexMatrix ginibre(int n) {
    ComplexMatrix g(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) g(i, j) = gaussian_complex();
    return g;
  }

  ComplexMatrix haar_unitary(int n) {
    Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(n));
    ComplexMatrix q = qr.householderQ();
    ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
      Complex d = r(j, j);
      q.col(j) *= d / std::abs(d);
    }
    return q;
  }

  DensityMatrix random_density(int n) {
    RealVector w = simplex(n);
    ComplexMatrix u = haar_unitary(n);
    ComplexMatrix rho = u * w.asDiagonal() * u.adjoint();
    rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
    return DensityMatrix(std::move(rho));
  }

  DensityMatrix random_pure(int n) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = gaussian_complex();
    v.normalize();
    ComplexMatrix rho = v * v.adjoint();
    rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
    return DensityMatrix(std::move(rho));
  }

  HermitianOperator random_hermitian(int n) {
    ComplexMatrix g = ginibre(n);
    return HermitianOperator(0.5 * (g + ComplexMatrix(g.adjoint())));
  }

  /// rho and H sharing a random eigenbasis, so [rho, H] = 0 exactly up to
  /// rounding.
  std::pair<DensityMatrix, HermitianOperator> random_commuting_pair(int n) {
    RealVector w = simplex(n);
    RealVector e(n);
    for (int i = 0; i < n; ++i) e(i) = uniform(-2.0, 2.0);
    ComplexMatrix u = haar_unitary(n);
    ComplexMatrix rho = u * w.asDiagonal() * u.adjoint();
    rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
    ComplexMatrix h = u * e.asDiagonal() * u.adjoint();
    h = 0.5 * (h + ComplexMatrix(h.adjoint()));
    return {DensityMatrix(std::move(rho)), HermitianOperator(std::move(h))};
  }

  BlochVector random_bloch() {
    // Uniform direction, radius biased toward the surface is fine for the
    // property suites; keep it simple: uniform in the ball by rejection.
    while (true) {
      BlochVector r{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
      if (r.norm() <= 1.0) return r;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qfd
