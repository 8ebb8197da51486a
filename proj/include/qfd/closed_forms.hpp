#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qfd/measures.hpp"

namespace qfd {

/// Analytic complexity formulas, one entry per displayed closed form.
/// Suffix convention: _N relative to the number operator, _X to the
/// quadrature X_theta, _L to the quadratic generator Lambda_theta.
enum class Family {
  Qubit,
  FockDiagN,
  DispFockDiagN,
  SqzFockDiagN,
  DispThermalN,
  SqzThermalN,
  GaussianN,
  MixtureN,
  FockDiagX,
  SqzFockDiagX,
  TwoLevelX,
  RhoPkLPower,
  ThermalX,
  TruncThermalX,
  PaThermalX,
  GaussianX,
  MixtureX,
  FockDiagL,
  DispFockDiagL,
  SqzFockDiagL,
  RhoPkL,
  ThermalL,
  DispThermalL,
  SqzThermalL,
  GaussianL,
  MixtureL,
  MixtureHalfX,
  MixtureHalfL,
};

/// Stable identifier strings; these are part of the CLI contract.
inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::Qubit: return "QUBIT";
    case Family::FockDiagN: return "FOCKDIAG_N";
    case Family::DispFockDiagN: return "DISP_FOCKDIAG_N";
    case Family::SqzFockDiagN: return "SQZ_FOCKDIAG_N";
    case Family::DispThermalN: return "DISP_THERMAL_N";
    case Family::SqzThermalN: return "SQZ_THERMAL_N";
    case Family::GaussianN: return "GAUSSIAN_N";
    case Family::MixtureN: return "MIXTURE_N";
    case Family::FockDiagX: return "FOCKDIAG_X";
    case Family::SqzFockDiagX: return "SQZ_FOCKDIAG_X";
    case Family::TwoLevelX: return "TWO_LEVEL_X";
    case Family::RhoPkLPower: return "RHO_PK_LPOWER";
    case Family::ThermalX: return "THERMAL_X";
    case Family::TruncThermalX: return "TRUNC_THERMAL_X";
    case Family::PaThermalX: return "PA_THERMAL_X";
    case Family::GaussianX: return "GAUSSIAN_X";
    case Family::MixtureX: return "MIXTURE_X";
    case Family::FockDiagL: return "FOCKDIAG_L";
    case Family::DispFockDiagL: return "DISP_FOCKDIAG_L";
    case Family::SqzFockDiagL: return "SQZ_FOCKDIAG_L";
    case Family::RhoPkL: return "RHO_PK_L";
    case Family::ThermalL: return "THERMAL_L";
    case Family::DispThermalL: return "DISP_THERMAL_L";
    case Family::SqzThermalL: return "SQZ_THERMAL_L";
    case Family::GaussianL: return "GAUSSIAN_L";
    case Family::MixtureL: return "MIXTURE_L";
    case Family::MixtureHalfX: return "MIXTURE_HALF_X";
    case Family::MixtureHalfL: return "MIXTURE_HALF_L";
  }
  return "?";
}

inline std::vector<Family> all_families() {
  return {Family::Qubit,        Family::FockDiagN,    Family::DispFockDiagN,
          Family::SqzFockDiagN, Family::DispThermalN, Family::SqzThermalN,
          Family::GaussianN,    Family::MixtureN,     Family::FockDiagX,
          Family::SqzFockDiagX, Family::TwoLevelX,    Family::RhoPkLPower,
          Family::ThermalX,     Family::TruncThermalX, Family::PaThermalX,
          Family::GaussianX,    Family::MixtureX,     Family::FockDiagL,
          Family::DispFockDiagL, Family::SqzFockDiagL, Family::RhoPkL,
          Family::ThermalL,     Family::DispThermalL, Family::SqzThermalL,
          Family::GaussianL,    Family::MixtureL,     Family::MixtureHalfX,
          Family::MixtureHalfL};
}

inline std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

/// Named parameters for the formula families. Complex parameters are
/// carried as (modulus, argument) pairs through the CLI but stored here as
/// plain complex numbers.
struct FormulaParams {
  double lambda = 0;
  double p = 0;
  double theta = 0;
  Complex z{0, 0};
  Complex zeta{0, 0};
  int m = 0;
  int n = 0;
  int k = 1;
  int l = 1;
  std::vector<double> weights;
  BlochVector r{0, 0, 0};
  Complex h12{0, 0};
  double series_eps = 1e-14;
};

// -- helper values ---------------------------------------------------------

inline double f_p(double p) {
  if (p < 0 || p > 1) throw ParamOutOfDomain("f_p: p must be in [0,1]");
  double s = std::sqrt(2.0 * p * (1.0 - p));
  return s * (1.0 - s);
}

inline double g_p(double p) {
  if (p < 0 || p > 1) throw ParamOutOfDomain("g_p: p must be in [0,1]");
  double d = std::sqrt(p) - std::sqrt(1.0 - p);
  return 2.0 * std::sqrt(p * (1.0 - p)) * d * d;
}

inline Complex beta_z_zeta(Complex z, Complex zeta) {
  double r = std::abs(zeta);
  return z * std::cosh(r) - std::conj(z) * std::exp(Complex(0, std::arg(zeta))) * std::sinh(r);
}

inline Complex beta_theta_zeta(double theta, Complex zeta) {
  double r = std::abs(zeta);
  return std::exp(Complex(0, theta)) * std::cosh(r) -
         std::exp(Complex(0, -(theta - std::arg(zeta)))) * std::sinh(r);
}

inline Complex beta_prime_theta_zeta(double theta, Complex zeta) {
  double r = std::abs(zeta);
  double ch = std::cosh(r), sh = std::sinh(r);
  return std::exp(Complex(0, theta)) * ch * ch +
         std::exp(Complex(0, -(theta - 2.0 * std::arg(zeta)))) * sh * sh;
}

inline Complex beta_theta_z_zeta(double theta, Complex z, Complex zeta) {
  double r = std::abs(zeta);
  double theta_zeta = theta - std::arg(zeta);
  return std::conj(z) * std::exp(Complex(0, theta)) * std::cosh(r) -
         z * std::exp(Complex(0, -theta_zeta)) * std::sinh(r);
}

/// Noise value maximizing the thermal-state quadrature discord.
inline double lambda0() {
  double root = std::sqrt(2.0 + std::sqrt(5.0));
  return 2.0 + std::sqrt(5.0) - 2.0 * root;
}

/// String-keyed access to the helper quantities (CLI convenience).
inline Complex helper_value(std::string_view kind, const FormulaParams& prm) {
  if (kind == "f_p") return f_p(prm.p);
  if (kind == "g_p") return g_p(prm.p);
  if (kind == "beta_z_zeta") return beta_z_zeta(prm.z, prm.zeta);
  if (kind == "beta_theta_zeta") return beta_theta_zeta(prm.theta, prm.zeta);
  if (kind == "beta_prime_theta_zeta") return beta_prime_theta_zeta(prm.theta, prm.zeta);
  if (kind == "beta_theta_z_zeta") return beta_theta_z_zeta(prm.theta, prm.z, prm.zeta);
  throw ParamOutOfDomain("unknown helper kind '" + std::string(kind) + "'");
}

// -- diagonal-state series -------------------------------------------------

namespace detail {

inline void require_weights(const std::vector<double>& w, const Tolerances& tol = {}) {
  if (w.empty()) throw ParamOutOfDomain("weights vector is empty");
  double sum = 0;
  for (double x : w) {
    if (x < -tol.weight) throw ParamOutOfDomain("negative weight " + std::to_string(x));
    sum += x;
  }
  if (std::abs(sum - 1.0) > tol.weight)
    throw ParamOutOfDomain("weights sum to " + std::to_string(sum));
}

inline double at(const std::vector<double>& w, std::size_t i) {
  return i < w.size() ? std::max(w[i], 0.0) : 0.0;
}

/// sum_n sqrt(w_n w_{n+step}) (sqrt(w_n)-sqrt(w_{n+step}))^2 /
/// (w_n + w_{n+step}) * weight(n) over a finite weight vector. Pairs with
/// either entry zero contribute nothing.
template <typename WeightFn>
inline double diagonal_pair_sum(const std::vector<double>& w, int step, WeightFn&& weight) {
  double total = 0;
  for (std::size_t n = 0; n < w.size(); ++n) {
    double a = at(w, n);
    double b = at(w, n + static_cast<std::size_t>(step));
    if (a <= 0 || b <= 0) continue;
    double d = std::sqrt(a) - std::sqrt(b);
    total += std::sqrt(a * b) * d * d / (a + b) * weight(static_cast<double>(n));
  }
  return total;
}

}  // namespace detail

/// C(rho_D, X_theta) for a finite Fock-diagonal weight vector.
inline double fockdiag_x_sum(const std::vector<double>& w) {
  detail::require_weights(w);
  return 2.0 * detail::diagonal_pair_sum(w, 1, [](double n) { return n + 1.0; });
}

/// C(rho_D, Lambda_theta) for a finite Fock-diagonal weight vector.
inline double fockdiag_l_sum(const std::vector<double>& w) {
  detail::require_weights(w);
  return 2.0 * detail::diagonal_pair_sum(w, 2, [](double n) { return (n + 1.0) * (n + 2.0); });
}

/// Photon-added thermal quadrature discord: geometric series summed until
/// the running term drops below eps of the partial sum.
inline double pa_thermal_x_series(double lambda, double eps = 1e-14) {
  if (lambda <= 0 || lambda >= 1)
    throw ParamOutOfDomain("pa_thermal_x_series: lambda must be in (0,1)");
  double sum = 0;
  double pow_l = lambda;
  for (long n = 1; n <= 1000000; ++n) {
    double dn = static_cast<double>(n);
    double d = std::sqrt((dn + 1.0) * lambda) - std::sqrt(dn);
    double p_ln = std::sqrt(dn * (dn + 1.0) * (dn + 1.0) * (dn + 1.0)) * d * d /
                  ((dn + 1.0) * lambda + dn);
    double term = p_ln * pow_l;
    sum += term;
    if (n > 1 && term < eps * sum) {
      double c = 1.0 - lambda;
      return 2.0 * c * c / std::sqrt(lambda) * sum;
    }
    pow_l *= lambda;
  }
  throw SeriesNotConverged("pa_thermal_x_series at lambda = " + std::to_string(lambda));
}

// -- qubit closed form -------------------------------------------------------

namespace detail {

/// Eigenvectors of the Bloch state, majority eigenvalue (1+r)/2 first.
/// Poles (r1 = r2 = 0) use the computational basis directly.
inline std::pair<Eigen::Vector2cd, Eigen::Vector2cd> bloch_eigenvectors(const BlochVector& r) {
  double rr = r.norm();
  double perp2 = r.r1 * r.r1 + r.r2 * r.r2;
  Eigen::Vector2cd phi1, phi2;
  if (perp2 < 1e-24) {
    if (r.r3 >= 0) {
      phi1 << 1, 0;
      phi2 << 0, 1;
    } else {
      phi1 << 0, 1;
      phi2 << 1, 0;
    }
    return {phi1, phi2};
  }
  Complex off(r.r1, -r.r2);
  phi1 << off, -(r.r3 - rr);
  phi2 << off, -(r.r3 + rr);
  phi1 /= std::sqrt(2.0 * rr * (rr - r.r3));
  phi2 /= std::sqrt(2.0 * rr * (rr + r.r3));
  return {phi1, phi2};
}

}  // namespace detail

/// Closed-form qubit discord (r^2 - 1 + sqrt(1-r^2)) |<phi_1|H|phi_2>|^2.
inline double qubit_discord_closed(const BlochVector& r, const HermitianOperator& h) {
  double rr = r.norm();
  if (rr > 1.0 + 1e-12) throw BlochOutOfBall("Bloch vector norm " + std::to_string(rr));
  if (h.dim() != 2) throw DimensionMismatch("qubit_discord_closed needs a 2x2 Hamiltonian");
  double coeff = rr * rr - 1.0 + std::sqrt(std::max(0.0, 1.0 - rr * rr));
  if (coeff <= 0) return 0.0;
  auto [phi1, phi2] = detail::bloch_eigenvectors(r);
  Complex h12 = phi1.adjoint() * (h.mat() * phi2);
  return coeff * std::norm(h12);
}

// -- the registry ------------------------------------------------------------

inline double evaluate_closed_form(Family family, const FormulaParams& prm) {
  auto require_lambda = [&](bool open_at_zero) {
    if (prm.lambda < 0 || prm.lambda >= 1 || (open_at_zero && prm.lambda <= 0))
      throw ParamOutOfDomain("lambda = " + std::to_string(prm.lambda) + " out of domain for " +
                             std::string(family_name(family)));
  };
  auto require_p = [&] {
    if (prm.p < 0 || prm.p > 1)
      throw ParamOutOfDomain("p = " + std::to_string(prm.p) + " out of domain");
  };
  auto mixture_levels = [&]() -> std::pair<int, int> {
    if (prm.m == prm.n) throw EqualLevels("mixture levels must differ");
    if (prm.m < 0 || prm.n < 0) throw LevelOutOfRange("negative Fock level");
    return {std::min(prm.m, prm.n), std::max(prm.m, prm.n)};
  };
  auto factorial = [](int k) {
    double out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
  };

  const double sinh2_2zeta = [&] {
    double s = std::sinh(2.0 * std::abs(prm.zeta));
    return s * s;
  }();

  switch (family) {
    case Family::Qubit: {
      double rr = prm.r.norm();
      if (rr > 1.0 + 1e-12) throw ParamOutOfDomain("Bloch vector norm " + std::to_string(rr));
      double coeff = rr * rr - 1.0 + std::sqrt(std::max(0.0, 1.0 - rr * rr));
      return coeff * std::norm(prm.h12);
    }
    case Family::FockDiagN:
      detail::require_weights(prm.weights);
      return 0.0;
    case Family::DispFockDiagN:
      return std::norm(prm.z) * fockdiag_x_sum(prm.weights);
    case Family::SqzFockDiagN: {
      detail::require_weights(prm.weights);
      double series = detail::diagonal_pair_sum(
          prm.weights, 2, [](double n) { return n * n + 3.0 * n + 2.0; });
      return 0.5 * sinh2_2zeta * series;
    }
    case Family::DispThermalN: {
      require_lambda(false);
      double sq = std::sqrt(prm.lambda);
      return 2.0 * std::norm(prm.z) * sq * (1.0 - sq) * (1.0 - sq) /
             (1.0 - prm.lambda * prm.lambda);
    }
    case Family::SqzThermalN:
      require_lambda(false);
      return prm.lambda * sinh2_2zeta / (1.0 + prm.lambda * prm.lambda);
    case Family::GaussianN: {
      require_lambda(false);
      double sq = std::sqrt(prm.lambda);
      double disp = 2.0 * sq * (1.0 - sq) * (1.0 - sq) * std::norm(beta_z_zeta(prm.z, prm.zeta)) /
                    (1.0 - prm.lambda * prm.lambda);
      return prm.lambda * sinh2_2zeta / (1.0 + prm.lambda * prm.lambda) + disp;
    }
    case Family::MixtureN: {
      require_p();
      auto [lo, hi] = mixture_levels();
      if (lo != 0) return 0.0;
      double denom = (1.0 - prm.p) * (1.0 - prm.p) + prm.p * prm.p;
      return static_cast<double>(hi) * hi * prm.p * prm.p * f_p(prm.p) / (4.0 * denom);
    }
    case Family::FockDiagX:
      return fockdiag_x_sum(prm.weights);
    case Family::SqzFockDiagX:
      return std::norm(beta_theta_zeta(prm.theta, prm.zeta)) * fockdiag_x_sum(prm.weights);
    case Family::TwoLevelX:
      require_p();
      return g_p(prm.p);
    case Family::RhoPkLPower: {
      require_p();
      if (prm.k < 1 || prm.l < 1) throw ParamOutOfDomain("RHO_PK_LPOWER needs k, l >= 1");
      return prm.k == prm.l ? g_p(prm.p) * factorial(prm.k) : 0.0;
    }
    case Family::ThermalX: {
      require_lambda(false);
      double sq = std::sqrt(prm.lambda);
      return 2.0 * sq * (1.0 - sq) * (1.0 - sq) / (1.0 - prm.lambda * prm.lambda);
    }
    case Family::TruncThermalX: {
      require_lambda(true);
      double sq = std::sqrt(prm.lambda);
      return 2.0 * sq * (1.0 - sq) * (1.0 - sq) * (2.0 - prm.lambda) /
             (1.0 - prm.lambda * prm.lambda);
    }
    case Family::PaThermalX:
      require_lambda(true);
      return pa_thermal_x_series(prm.lambda, prm.series_eps);
    case Family::GaussianX: {
      require_lambda(false);
      double sq = std::sqrt(prm.lambda);
      return 2.0 * sq * (1.0 - sq) * (1.0 - sq) *
             std::norm(beta_theta_zeta(prm.theta, prm.zeta)) / (1.0 - prm.lambda * prm.lambda);
    }
    case Family::MixtureX: {
      require_p();
      auto [lo, hi] = mixture_levels();
      if (lo == 0) {
        if (hi != 1) return 0.0;
        double denom = 2.0 * prm.p * prm.p - 2.0 * prm.p + 1.0;
        double cos_t = std::cos(prm.theta);
        return (1.0 - prm.p * prm.p * cos_t * cos_t / denom) * f_p(prm.p);
      }
      if (lo == 1) return 0.5 * g_p(prm.p);
      return 0.0;
    }
    case Family::FockDiagL:
      return fockdiag_l_sum(prm.weights);
    case Family::DispFockDiagL:
      return fockdiag_l_sum(prm.weights) + 4.0 * std::norm(prm.z) * fockdiag_x_sum(prm.weights);
    case Family::SqzFockDiagL:
      return std::norm(beta_prime_theta_zeta(prm.theta, prm.zeta)) * fockdiag_l_sum(prm.weights);
    case Family::RhoPkL:
      require_p();
      if (prm.k < 1) throw ParamOutOfDomain("RHO_PK_L needs k >= 1");
      return prm.k == 2 ? 2.0 * g_p(prm.p) : 0.0;
    case Family::ThermalL:
      require_lambda(false);
      return 4.0 * prm.lambda / (1.0 + prm.lambda * prm.lambda);
    case Family::DispThermalL: {
      require_lambda(false);
      double sq = std::sqrt(prm.lambda);
      return 8.0 * sq * (1.0 - sq) * (1.0 - sq) * std::norm(prm.z) /
                 (1.0 - prm.lambda * prm.lambda) +
             4.0 * prm.lambda / (1.0 + prm.lambda * prm.lambda);
    }
    case Family::SqzThermalL:
      require_lambda(false);
      return 4.0 * prm.lambda * std::norm(beta_prime_theta_zeta(prm.theta, prm.zeta)) /
             (1.0 + prm.lambda * prm.lambda);
    case Family::GaussianL: {
      require_lambda(false);
      double sq = std::sqrt(prm.lambda);
      return 4.0 * prm.lambda * std::norm(beta_prime_theta_zeta(prm.theta, prm.zeta)) /
                 (1.0 + prm.lambda * prm.lambda) +
             8.0 * sq * (1.0 - sq) * (1.0 - sq) *
                 std::norm(beta_theta_z_zeta(prm.theta, prm.z, prm.zeta)) /
                 (1.0 - prm.lambda * prm.lambda);
    }
    case Family::MixtureL: {
      require_p();
      auto [lo, hi] = mixture_levels();
      if (lo == 0) {
        if (hi != 2) return 0.0;
        double denom = 2.0 * prm.p * prm.p - 2.0 * prm.p + 1.0;
        double cos_t = std::cos(prm.theta);
        return (2.0 - 2.0 * prm.p * prm.p * cos_t * cos_t / denom) * f_p(prm.p);
      }
      return (lo == 2 || hi == 2) ? g_p(prm.p) : 0.0;
    }
    case Family::MixtureHalfX: {
      if (std::min(prm.m, prm.n) != 0 || std::max(prm.m, prm.n) != 1) return 0.0;
      double s = std::sin(prm.theta);
      return 0.25 * (std::numbers::sqrt2 - 1.0) * (1.0 + s * s);
    }
    case Family::MixtureHalfL: {
      if (std::min(prm.m, prm.n) != 0 || std::max(prm.m, prm.n) != 2) return 0.0;
      return 0.25 * (std::numbers::sqrt2 - 1.0) * (3.0 - std::cos(2.0 * prm.theta));
    }
  }
  throw ParamOutOfDomain("unknown family");
}

// -- spectral counterparts ----------------------------------------------------

/// Conjugate a state by a unitary, re-Hermitize and renormalize.
inline DensityMatrix conjugate_by_unitary(const DensityMatrix& rho, const ComplexMatrix& u,
                                          const Tolerances& tol = {}) {
  ComplexMatrix out = u * rho.mat() * u.adjoint();
  out = 0.5 * (out + ComplexMatrix(out.adjoint()));
  out /= out.trace().real();
  return DensityMatrix(std::move(out), tol);
}

struct SpectralPair {
  StateBuilder state;
  OperatorBuilder ham;
};

/// The constructed (state, Hamiltonian) pair whose spectral Fisher discord
/// the family's formula predicts. This is the bridge used by the oracle
/// cross-validation and by the sweep CSVs.
inline SpectralPair spectral_pair(Family family, const FormulaParams& prm) {
  auto diag = [prm](const FockConfig& cfg) { return fock_diagonal(prm.weights, cfg); };
  auto displaced_diag = [prm](const FockConfig& cfg) {
    return conjugate_by_unitary(fock_diagonal(prm.weights, cfg), displacement(prm.z, cfg));
  };
  auto squeezed_diag = [prm](const FockConfig& cfg) {
    return conjugate_by_unitary(fock_diagonal(prm.weights, cfg), squeeze(prm.zeta, cfg));
  };
  auto gauss = [prm](const FockConfig& cfg) {
    return gaussian(prm.lambda, prm.zeta, prm.z, cfg);
  };
  auto mixture = [prm](const FockConfig& cfg) {
    return superposition_mixture(prm.p, prm.m, prm.n, cfg);
  };
  auto two_level = [prm](const FockConfig& cfg) {
    return fock_diagonal({prm.p, 1.0 - prm.p}, cfg);
  };
  auto rho_pk = [prm](const FockConfig& cfg) {
    std::vector<double> w(static_cast<std::size_t>(prm.k) + 1, 0.0);
    w.front() = prm.p;
    w.back() = 1.0 - prm.p;
    return fock_diagonal(w, cfg);
  };

  auto number = [](const FockConfig& cfg) { return number_op(cfg); };
  auto quad = [prm](const FockConfig& cfg) { return quadrature(prm.theta, cfg); };
  auto quad2 = [prm](const FockConfig& cfg) { return quad_squared(prm.theta, cfg); };

  switch (family) {
    case Family::Qubit: {
      auto state = [prm](const FockConfig&) { return qubit_from_bloch(prm.r); };
      auto ham = [prm](const FockConfig&) {
        auto [phi1, phi2] = detail::bloch_eigenvectors(prm.r);
        ComplexMatrix h = prm.h12 * (phi1 * phi2.adjoint());
        h += h.adjoint().eval();
        return HermitianOperator(std::move(h));
      };
      return {state, ham};
    }
    case Family::FockDiagN:
      return {diag, number};
    case Family::DispFockDiagN:
      return {displaced_diag, number};
    case Family::SqzFockDiagN:
      return {squeezed_diag, number};
    case Family::DispThermalN: {
      auto state = [prm](const FockConfig& cfg) {
        return gaussian(prm.lambda, 0.0, prm.z, cfg);
      };
      return {state, number};
    }
    case Family::SqzThermalN: {
      auto state = [prm](const FockConfig& cfg) {
        return gaussian(prm.lambda, prm.zeta, 0.0, cfg);
      };
      return {state, number};
    }
    case Family::GaussianN:
      return {gauss, number};
    case Family::MixtureN:
      return {mixture, number};
    case Family::FockDiagX:
      return {diag, quad};
    case Family::SqzFockDiagX:
      return {squeezed_diag, quad};
    case Family::TwoLevelX:
      return {two_level, quad};
    case Family::RhoPkLPower: {
      auto ham = [prm](const FockConfig& cfg) { return ladder_power(prm.l, prm.theta, cfg); };
      return {rho_pk, ham};
    }
    case Family::ThermalX: {
      auto state = [prm](const FockConfig& cfg) { return thermal(prm.lambda, cfg); };
      return {state, quad};
    }
    case Family::TruncThermalX: {
      auto state = [prm](const FockConfig& cfg) { return truncated_thermal(prm.lambda, cfg); };
      return {state, quad};
    }
    case Family::PaThermalX: {
      auto state = [prm](const FockConfig& cfg) { return photon_added_thermal(prm.lambda, cfg); };
      return {state, quad};
    }
    case Family::GaussianX:
      return {gauss, quad};
    case Family::MixtureX:
      return {mixture, quad};
    case Family::FockDiagL:
      return {diag, quad2};
    case Family::DispFockDiagL:
      return {displaced_diag, quad2};
    case Family::SqzFockDiagL:
      return {squeezed_diag, quad2};
    case Family::RhoPkL:
      return {rho_pk, quad2};
    case Family::ThermalL: {
      auto state = [prm](const FockConfig& cfg) { return thermal(prm.lambda, cfg); };
      return {state, quad2};
    }
    case Family::DispThermalL: {
      auto state = [prm](const FockConfig& cfg) {
        return gaussian(prm.lambda, 0.0, prm.z, cfg);
      };
      return {state, quad2};
    }
    case Family::SqzThermalL: {
      auto state = [prm](const FockConfig& cfg) {
        return gaussian(prm.lambda, prm.zeta, 0.0, cfg);
      };
      return {state, quad2};
    }
    case Family::GaussianL:
      return {gauss, quad2};
    case Family::MixtureL:
      return {mixture, quad2};
    case Family::MixtureHalfX: {
      auto state = [prm](const FockConfig& cfg) {
        return superposition_mixture(0.5, prm.m, prm.n, cfg);
      };
      return {state, quad};
    }
    case Family::MixtureHalfL: {
      auto state = [prm](const FockConfig& cfg) {
        return superposition_mixture(0.5, prm.m, prm.n, cfg);
      };
      return {state, quad2};
    }
  }
  throw ParamOutOfDomain("unknown family");
}

}  // namespace qfd
