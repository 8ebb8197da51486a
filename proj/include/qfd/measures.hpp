#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "qfd/states.hpp"

namespace qfd {

/// The three spectral quantities for one (rho, H) pair plus diagnostics.
/// c is evaluated from its own spectral sum, never as the float difference
/// i_f - i_w; the identity between the two is enforced as an invariant.
struct DiscordReport {
  double i_f = 0;
  double i_w = 0;
  double c = 0;
  int rank = 0;
  double min_eigenvalue = 0;
  std::optional<int> truncation_dim;
  std::optional<bool> converged;
};

namespace detail {

inline void require_same_dim(const DensityMatrix& rho, const HermitianOperator& h) {
  if (rho.dim() != h.dim())
    throw DimensionMismatch("state dim " + std::to_string(rho.dim()) +
                            " vs Hamiltonian dim " + std::to_string(h.dim()));
}

/// One pass over all eigenvalue pairs. Eigenvalues below eig_floor are
/// treated as exactly zero; pairs whose sum is below pair_floor contribute
/// nothing to any of the three sums (they are kernel-kernel pairs).
/// The sums are basis-permutation invariant, so exactly diagonal states
/// skip the eigendecomposition and the basis rotation entirely.
inline DiscordReport spectral_sums(const DensityMatrix& rho, const HermitianOperator& h,
                                   const Tolerances& tol) {
  require_same_dim(rho, h);
  const Eigen::Index n = rho.dim();
  const bool diagonal = detail::exactly_diagonal(rho.mat());

  DiscordReport rep;
  RealVector raw(n);
  ComplexMatrix h_rot;
  if (diagonal) {
    for (Eigen::Index i = 0; i < n; ++i) raw(i) = rho.mat()(i, i).real();
  } else {
    Spectrum s = eig_hermitian(rho.op());
    raw = s.eigenvalues;
    h_rot = s.eigenvectors.adjoint() * h.mat() * s.eigenvectors;
  }
  const ComplexMatrix& h_use = diagonal ? h.mat() : h_rot;

  rep.min_eigenvalue = raw.minCoeff();
  if (rep.min_eigenvalue < -tol.psd_clip)
    throw NotPSD("density eigenvalue " + std::to_string(rep.min_eigenvalue));

  RealVector lam(n), root(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lam(i) = raw(i) < tol.eig_floor ? 0.0 : raw(i);
    root(i) = std::sqrt(lam(i));
    if (lam(i) > 0) ++rep.rank;
  }

  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = m + 1; k < n; ++k) {
      double h2 = std::norm(h_use(m, k));
      if (h2 == 0.0) continue;
      double sum = lam(m) + lam(k);
      double droot = root(m) - root(k);
      rep.i_w += droot * droot * h2;
      if (sum > tol.pair_floor) {
        double dlam = lam(m) - lam(k);
        rep.i_f += dlam * dlam / sum * h2;
        rep.c += 2.0 * root(m) * root(k) * droot * droot / sum * h2;
      }
    }
  }
  return rep;
}

inline void enforce_report_invariants(const DiscordReport& r) {
  const double slack = 1e-10;
  if (std::abs(r.c - (r.i_f - r.i_w)) > slack * std::max(1.0, r.i_f))
    throw Error("internal: discord sum disagrees with i_f - i_w by " +
                std::to_string(r.c - (r.i_f - r.i_w)));
  if (r.c < -slack || r.c > r.i_w + slack || r.i_w > r.i_f + slack ||
      r.i_f > 2 * r.i_w + slack)
    throw Error("internal: ordering chain 0 <= C <= I_W <= I_F <= 2 I_W violated");
}

}  // namespace detail

/// Wigner-Yanase skew information via the spectral double sum.
inline double skew_information(const DensityMatrix& rho, const HermitianOperator& h,
                               const Tolerances& tol = {}) {
  return detail::spectral_sums(rho, h, tol).i_w;
}

/// Cross-check path: -1/2 tr([sqrt(rho), H]^2).
inline double skew_information_via_sqrt(const DensityMatrix& rho, const HermitianOperator& h,
                                        const Tolerances& tol = {}) {
  detail::require_same_dim(rho, h);
  ComplexMatrix comm = commutator(psd_sqrt(rho.op(), tol.psd_clip).mat(), h.mat());
  return -0.5 * (comm * comm).trace().real();
}

/// SLD quantum Fisher information via the spectral double sum.
inline double sld_fisher(const DensityMatrix& rho, const HermitianOperator& h,
                         const Tolerances& tol = {}) {
  return detail::spectral_sums(rho, h, tol).i_f;
}

/// All three quantities at once, with the report invariants enforced.
inline DiscordReport fisher_discord(const DensityMatrix& rho, const HermitianOperator& h,
                                    const Tolerances& tol = {}) {
  DiscordReport rep = detail::spectral_sums(rho, h, tol);
  detail::enforce_report_invariants(rep);
  return rep;
}

/// Symmetric logarithmic derivative L solving i[rho, H] = (L rho + rho L)/2,
/// assembled in the eigenbasis of rho and rotated back.
inline HermitianOperator sld_operator(const DensityMatrix& rho, const HermitianOperator& h,
                                      const Tolerances& tol = {}) {
  detail::require_same_dim(rho, h);
  Spectrum s = eig_hermitian(rho.op());
  const Eigen::Index n = rho.dim();
  RealVector lam(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double v = s.eigenvalues(i);
    lam(i) = v < tol.eig_floor ? 0.0 : v;
  }
  ComplexMatrix h_rot = s.eigenvectors.adjoint() * h.mat() * s.eigenvectors;
  ComplexMatrix l = ComplexMatrix::Zero(n, n);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = 0; k < n; ++k) {
      double sum = lam(m) + lam(k);
      if (sum > tol.pair_floor)
        l(m, k) = Complex(0, 2) * (lam(k) - lam(m)) / sum * h_rot(m, k);
    }
  }
  ComplexMatrix back = s.eigenvectors * l * s.eigenvectors.adjoint();
  back = 0.5 * (back + ComplexMatrix(back.adjoint()));
  return HermitianOperator(std::move(back), tol);
}

/// Unitary orbit point e^{-i theta H} rho e^{i theta H}.
inline DensityMatrix evolve(const DensityMatrix& rho, const HermitianOperator& h, double theta,
                            const Tolerances& tol = {}) {
  detail::require_same_dim(rho, h);
  ComplexMatrix u = unitary_from_generator(Complex(0, -theta) * h.mat(), tol);
  ComplexMatrix out = u * rho.mat() * u.adjoint();
  out = 0.5 * (out + ComplexMatrix(out.adjoint()));
  return DensityMatrix(std::move(out), tol);
}

/// Max deviation of (i_f, i_w, c) along the orbit of H over the given angles.
inline double orbit_invariance_check(const DensityMatrix& rho, const HermitianOperator& h,
                                     std::span<const double> thetas,
                                     const Tolerances& tol = {}) {
  if (thetas.empty()) throw ParamOutOfDomain("orbit_invariance_check: empty theta list");
  DiscordReport base = fisher_discord(rho, h, tol);
  double dev = 0;
  for (double theta : thetas) {
    DiscordReport r = fisher_discord(evolve(rho, h, theta, tol), h, tol);
    dev = std::max({dev, std::abs(r.i_f - base.i_f), std::abs(r.i_w - base.i_w),
                    std::abs(r.c - base.c)});
  }
  return dev;
}

/// C(rho12, H1 (x) 1) - C(tr_2 rho12, H1). Exploratory: the sign is logged,
/// not asserted.
inline double bipartite_monotonicity_probe(const DensityMatrix& rho12, Eigen::Index d1,
                                           Eigen::Index d2, const HermitianOperator& h1,
                                           const Tolerances& tol = {}) {
  if (h1.dim() != d1) throw DimensionMismatch("probe: H1 must act on subsystem 1");
  HermitianOperator h_full(tensor_product(h1.mat(), identity(d2)), tol);
  double c_joint = fisher_discord(rho12, h_full, tol).c;
  double c_reduced = fisher_discord(partial_trace(rho12, d1, d2, 1, tol), h1, tol).c;
  return c_joint - c_reduced;
}

using StateBuilder = std::function<DensityMatrix(const FockConfig&)>;
using OperatorBuilder = std::function<HermitianOperator(const FockConfig&)>;

/// Walk the truncation ladder until i_f, i_w and c are all stable to
/// conv_tol; the report carries the dim used and the convergence flag.
inline DiscordReport fisher_discord_converged(const StateBuilder& state,
                                              const OperatorBuilder& ham, const FockConfig& cfg,
                                              const Tolerances& tol = {}) {
  DiscordReport rep;
  bool have_prev = false;
  DiscordReport prev;
  for (int d : truncation_ladder(cfg)) {
    FockConfig at = cfg.at_dim(d);
    rep = fisher_discord(state(at), ham(at), tol);
    rep.truncation_dim = d;
    rep.converged = false;
    if (have_prev) {
      double diff = std::max({std::abs(rep.i_f - prev.i_f), std::abs(rep.i_w - prev.i_w),
                              std::abs(rep.c - prev.c)});
      double scale = std::max({1.0, std::abs(rep.i_f), std::abs(rep.i_w), std::abs(rep.c)});
      if (diff <= cfg.conv_tol * scale) {
        rep.converged = true;
        return rep;
      }
    }
    prev = rep;
    have_prev = true;
  }
  return rep;
}

}  // namespace qfd
