#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <utility>
#include <vector>

#include "qfd/config.hpp"
#include "qfd/errors.hpp"

namespace qfd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

inline void require_finite(const ComplexMatrix& a) {
  if (!a.allFinite()) throw Error("matrix contains NaN or Inf entries");
}

inline void require_square(const ComplexMatrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("expected a square matrix, got " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
}

inline bool is_hermitian(const ComplexMatrix& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

inline ComplexMatrix identity(Eigen::Index n) {
  return ComplexMatrix::Identity(n, n);
}

inline ComplexMatrix pauli_x() {
  ComplexMatrix s(2, 2);
  s << 0, 1, 1, 0;
  return s;
}

inline ComplexMatrix pauli_y() {
  ComplexMatrix s(2, 2);
  s << 0, Complex(0, -1), Complex(0, 1), 0;
  return s;
}

inline ComplexMatrix pauli_z() {
  ComplexMatrix s(2, 2);
  s << 1, 0, 0, -1;
  return s;
}

/// A square matrix validated to be Hermitian within the configured tolerance.
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix mat, const Tolerances& tol = {})
      : mat_(std::move(mat)) {
    require_square(mat_);
    require_finite(mat_);
    if (max_abs(mat_ - mat_.adjoint()) > tol.hermitian)
      throw NonHermitianInput("matrix deviates from its adjoint by " +
                              std::to_string(max_abs(mat_ - mat_.adjoint())));
  }

  const ComplexMatrix& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// Eigenvalues (ascending) and a unitary matrix of eigenvector columns.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

namespace detail {

// Exactness shortcut for matrices that are diagonal by construction
// (Fock-diagonal states, number operators). Sorting is stable on the
// level index, so the output is deterministic.
inline bool exactly_diagonal(const ComplexMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j && a(i, j) != Complex(0, 0)) return false;
  return true;
}

inline Spectrum diagonal_spectrum(const ComplexMatrix& a) {
  const Eigen::Index n = a.rows();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });
  Spectrum s;
  s.eigenvalues.resize(n);
  s.eigenvectors = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    s.eigenvalues(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]).real();
    s.eigenvectors(order[static_cast<std::size_t>(k)], k) = 1.0;
  }
  return s;
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian operator, eigenvalues ascending.
inline Spectrum eig_hermitian(const HermitianOperator& a) {
  if (detail::exactly_diagonal(a.mat())) return detail::diagonal_spectrum(a.mat());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.mat());
  if (solver.info() != Eigen::Success)
    throw ConvergenceFailure("Hermitian eigensolver did not converge");
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

/// Positive-semidefinite square root. Eigenvalues in [-clip, 0) are clipped
/// to zero; anything below -clip is rejected.
inline HermitianOperator psd_sqrt(const HermitianOperator& a, double clip = 1e-12) {
  Spectrum s = eig_hermitian(a);
  const Eigen::Index n = a.dim();
  RealVector roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double lam = s.eigenvalues(i);
    if (lam < -clip)
      throw NotPSD("eigenvalue " + std::to_string(lam) + " below -" + std::to_string(clip));
    roots(i) = std::sqrt(std::max(lam, 0.0));
  }
  ComplexMatrix b = s.eigenvectors * roots.asDiagonal() * s.eigenvectors.adjoint();
  return HermitianOperator(0.5 * (b + ComplexMatrix(b.adjoint())));
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a);
  require_square(b);
  if (a.rows() != b.rows())
    throw DimensionMismatch("commutator of " + std::to_string(a.rows()) + "-dim and " +
                            std::to_string(b.rows()) + "-dim operators");
  return a * b - b * a;
}

/// exp(G) for a skew-Hermitian generator G, computed through the spectral
/// decomposition of the Hermitian matrix iG. The result is unitary to
/// rounding regardless of the generator's norm.
inline ComplexMatrix unitary_from_generator(const ComplexMatrix& g, const Tolerances& tol = {}) {
  require_square(g);
  require_finite(g);
  if (max_abs(g + g.adjoint()) > tol.skew_hermitian)
    throw NotSkewHermitian("generator deviates from skew-Hermitian by " +
                           std::to_string(max_abs(g + g.adjoint())));
  ComplexMatrix m = Complex(0, 1) * g;
  m = 0.5 * (m + ComplexMatrix(m.adjoint()));
  Spectrum s = eig_hermitian(HermitianOperator(std::move(m), tol));
  const Eigen::Index n = g.rows();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::exp(Complex(0, -s.eigenvalues(i)));
  return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

/// Kronecker product with the left factor on the slow index.
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Block-diagonal direct sum of square matrices.
inline ComplexMatrix direct_sum(const std::vector<ComplexMatrix>& blocks) {
  Eigen::Index total = 0;
  for (const auto& b : blocks) {
    require_square(b);
    total += b.rows();
  }
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    out.block(at, at, b.rows(), b.rows()) = b;
    at += b.rows();
  }
  return out;
}

/// Trace out one tensor factor of an operator on C^{d1} (x) C^{d2}.
/// keep = 1 keeps the left (slow) factor, keep = 2 the right one.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, Eigen::Index d1, Eigen::Index d2,
                                   int keep) {
  require_square(m);
  if (d1 < 1 || d2 < 1 || d1 * d2 != m.rows())
    throw DimensionMismatch("partial_trace: " + std::to_string(d1) + "x" + std::to_string(d2) +
                            " does not factor a " + std::to_string(m.rows()) + "-dim operator");
  if (keep != 1 && keep != 2) throw DimensionMismatch("partial_trace: keep must be 1 or 2");
  if (keep == 1) {
    ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
    for (Eigen::Index i = 0; i < d1; ++i)
      for (Eigen::Index j = 0; j < d1; ++j)
        for (Eigen::Index k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
  for (Eigen::Index i = 0; i < d2; ++i)
    for (Eigen::Index j = 0; j < d2; ++j)
      for (Eigen::Index k = 0; k < d1; ++k) out(i, j) += m(k * d2 + i, k * d2 + j);
  return out;
}

}  // namespace qfd
