#pragma once

#include <cstdint>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qfd/closed_forms.hpp"
#include "qfd/random_states.hpp"

namespace qfd {

struct VerifyOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = 500;          // random instances for the ordering chain
  int oracle_points = 20;    // in-domain samples per formula family
  FockConfig fock{};
  std::string corrupt_family;  // test hook: perturb one family's closed form
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

inline void print_table(std::ostream& os, const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(34) << r.name << " "
       << r.detail << "\n";
}

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

struct Checker {
  std::vector<CheckResult> results;

  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    try {
      r.detail = body();
      r.passed = true;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

inline void expect(bool ok, const std::string& message) {
  if (!ok) throw Error(message);
}

inline double variance_of(const DensityMatrix& rho, const HermitianOperator& h) {
  double mean = (rho.mat() * h.mat()).trace().real();
  double second = (rho.mat() * h.mat() * h.mat()).trace().real();
  return second - mean * mean;
}

/// Deterministic in-domain sample for one family's oracle comparison.
inline FormulaParams sample_family_params(Family family, int index, StateSampler& sampler) {
  FormulaParams prm;
  auto angle = [&] { return sampler.uniform(0.0, 2.0 * std::numbers::pi); };
  auto weights = [&](int max_len) {
    int len = sampler.uniform_int(2, max_len);
    RealVector w = sampler.simplex(len);
    std::vector<double> out(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out[static_cast<std::size_t>(i)] = w(i);
    return out;
  };
  switch (family) {
    case Family::Qubit:
      prm.r = sampler.random_bloch();
      break;
    case Family::FockDiagN:
    case Family::FockDiagX:
    case Family::FockDiagL:
      prm.weights = weights(7);
      break;
    case Family::DispFockDiagN:
    case Family::DispFockDiagL:
      prm.weights = weights(6);
      prm.z = std::polar(sampler.uniform(0.0, 1.2), angle());
      prm.theta = angle();
      break;
    case Family::SqzFockDiagN:
    case Family::SqzFockDiagX:
    case Family::SqzFockDiagL:
      prm.weights = weights(6);
      prm.zeta = std::polar(sampler.uniform(0.0, 0.8), angle());
      prm.theta = angle();
      break;
    case Family::DispThermalN:
    case Family::DispThermalL:
      prm.lambda = sampler.uniform(0.02, 0.7);
      prm.z = std::polar(sampler.uniform(0.0, 1.2), angle());
      prm.theta = angle();
      break;
    case Family::SqzThermalN:
    case Family::SqzThermalL:
      prm.lambda = sampler.uniform(0.02, 0.7);
      prm.zeta = std::polar(sampler.uniform(0.0, 0.8), angle());
      prm.theta = angle();
      break;
    case Family::GaussianN:
    case Family::GaussianX:
    case Family::GaussianL:
      prm.lambda = sampler.uniform(0.02, 0.7);
      prm.z = std::polar(sampler.uniform(0.0, 1.2), angle());
      prm.zeta = std::polar(sampler.uniform(0.0, 0.8), angle());
      prm.theta = angle();
      break;
    case Family::MixtureN:
    case Family::MixtureX:
    case Family::MixtureL: {
      prm.p = sampler.uniform(0.0, 1.0);
      prm.theta = angle();
      switch (index % 4) {
        case 0: prm.m = 0; prm.n = sampler.uniform_int(1, 4); break;
        case 1: prm.m = 1; prm.n = sampler.uniform_int(2, 5); break;
        case 2: prm.m = 2; prm.n = sampler.uniform_int(3, 5); break;
        default: prm.m = 0; prm.n = sampler.uniform_int(1, 2); break;
      }
      break;
    }
    case Family::TwoLevelX:
      prm.p = sampler.uniform(0.0, 1.0);
      prm.theta = angle();
      break;
    case Family::RhoPkLPower:
      prm.p = sampler.uniform(0.0, 1.0);
      prm.theta = angle();
      prm.k = sampler.uniform_int(1, 4);
      prm.l = (index % 2 == 0) ? prm.k : sampler.uniform_int(1, 4);
      break;
    case Family::RhoPkL:
      prm.p = sampler.uniform(0.0, 1.0);
      prm.theta = angle();
      prm.k = sampler.uniform_int(1, 4);
      break;
    case Family::ThermalX:
    case Family::ThermalL:
      prm.lambda = sampler.uniform(0.0, 0.9);
      prm.theta = angle();
      break;
    case Family::TruncThermalX:
    case Family::PaThermalX:
      prm.lambda = sampler.uniform(0.02, 0.9);
      prm.theta = angle();
      break;
    case Family::MixtureHalfX:
      prm.m = 0;
      prm.n = (index % 3 == 2) ? 2 : 1;
      prm.theta = angle();
      break;
    case Family::MixtureHalfL:
      prm.m = 0;
      prm.n = (index % 3 == 2) ? 1 : 2;
      prm.theta = angle();
      break;
  }
  return prm;
}

}  // namespace detail

/// Run the invariant suite and the closed-form/spectral oracle grid.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  using detail::expect;
  using detail::fmt;
  detail::Checker checker;
  const Tolerances tol;
  const int trials = std::max(1, opt.trials);
  const int law_trials = std::max(1, trials / 5);

  checker.run("ordering_chain", [&] {
    StateSampler sampler(opt.seed);
    double worst = 0;
    for (int t = 0; t < trials; ++t) {
      int dim = sampler.uniform_int(2, 16);
      DiscordReport r = fisher_discord(sampler.random_density(dim), sampler.random_hermitian(dim));
      worst = std::max({worst, -r.c, r.c - r.i_w, r.i_w - r.i_f, r.i_f - 2 * r.i_w});
    }
    expect(worst <= 1e-10, "ordering chain violated by " + fmt(worst));
    return std::to_string(trials) + " trials, worst slack " + fmt(worst);
  });

  checker.run("zero_law_pure", [&] {
    StateSampler sampler(opt.seed + 1);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int dim = sampler.uniform_int(2, 16);
      DiscordReport r = fisher_discord(sampler.random_pure(dim), sampler.random_hermitian(dim));
      worst = std::max(worst, r.c);
    }
    expect(worst <= 1e-10, "pure-state discord " + fmt(worst));
    return "max C on pure states " + fmt(worst);
  });

  checker.run("zero_law_commuting", [&] {
    StateSampler sampler(opt.seed + 2);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int dim = sampler.uniform_int(2, 16);
      auto [rho, h] = sampler.random_commuting_pair(dim);
      worst = std::max(worst, fisher_discord(rho, h).c);
    }
    expect(worst <= 1e-10, "commuting-pair discord " + fmt(worst));
    return "max C on commuting pairs " + fmt(worst);
  });

  checker.run("pure_variance", [&] {
    StateSampler sampler(opt.seed + 3);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int dim = sampler.uniform_int(2, 16);
      DensityMatrix rho = sampler.random_pure(dim);
      HermitianOperator h = sampler.random_hermitian(dim);
      DiscordReport r = fisher_discord(rho, h);
      double var = detail::variance_of(rho, h);
      worst = std::max({worst, std::abs(r.i_f - var), std::abs(r.i_w - var)});
    }
    expect(worst <= 1e-8, "pure-state variance mismatch " + fmt(worst));
    return "max |I - Var| " + fmt(worst);
  });

  checker.run("unitary_covariance", [&] {
    StateSampler sampler(opt.seed + 4);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int dim = sampler.uniform_int(2, 12);
      DensityMatrix rho = sampler.random_density(dim);
      HermitianOperator h = sampler.random_hermitian(dim);
      ComplexMatrix u = sampler.haar_unitary(dim);
      double left = fisher_discord(conjugate_by_unitary(rho, u), h).c;
      ComplexMatrix hu = u.adjoint() * h.mat() * u;
      hu = 0.5 * (hu + ComplexMatrix(hu.adjoint()));
      double right = fisher_discord(rho, HermitianOperator(std::move(hu))).c;
      worst = std::max(worst, std::abs(left - right) / std::max(1.0, std::abs(right)));
    }
    expect(worst <= 1e-9, "covariance violated by " + fmt(worst));
    return "max relative deviation " + fmt(worst);
  });

  checker.run("shift_and_scale", [&] {
    StateSampler sampler(opt.seed + 5);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int dim = sampler.uniform_int(2, 12);
      DensityMatrix rho = sampler.random_density(dim);
      HermitianOperator h = sampler.random_hermitian(dim);
      double omega = sampler.uniform(-2.0, 2.0);
      double base = fisher_discord(rho, h).c;
      double shifted = fisher_discord(
          rho, HermitianOperator(h.mat() + omega * identity(dim))).c;
      double scaled = fisher_discord(rho, HermitianOperator(omega * h.mat())).c;
      worst = std::max(worst, std::abs(shifted - base) / std::max(1.0, base));
      worst = std::max(worst,
                       std::abs(scaled - omega * omega * base) / std::max(1.0, std::abs(scaled)));
    }
    expect(worst <= 1e-9, "shift/scale law violated by " + fmt(worst));
    return "max relative deviation " + fmt(worst);
  });

  checker.run("parallelogram", [&] {
    StateSampler sampler(opt.seed + 6);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int dim = sampler.uniform_int(2, 12);
      DensityMatrix rho = sampler.random_density(dim);
      HermitianOperator h1 = sampler.random_hermitian(dim);
      HermitianOperator h2 = sampler.random_hermitian(dim);
      double lhs = fisher_discord(rho, HermitianOperator(h1.mat() + h2.mat())).c +
                   fisher_discord(rho, HermitianOperator(h1.mat() - h2.mat())).c;
      double rhs = 2 * fisher_discord(rho, h1).c + 2 * fisher_discord(rho, h2).c;
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    expect(worst <= 1e-9, "parallelogram violated by " + fmt(worst));
    return "max relative deviation " + fmt(worst);
  });

  checker.run("composite_parallelogram", [&] {
    StateSampler sampler(opt.seed + 7);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int d1 = sampler.uniform_int(2, 4), d2 = sampler.uniform_int(2, 4);
      DensityMatrix rho = sampler.random_density(d1 * d2);
      HermitianOperator h1 = sampler.random_hermitian(d1);
      HermitianOperator h2 = sampler.random_hermitian(d2);
      ComplexMatrix a = tensor_product(h1.mat(), identity(d2));
      ComplexMatrix b = tensor_product(identity(d1), h2.mat());
      double lhs = fisher_discord(rho, HermitianOperator(a + b)).c +
                   fisher_discord(rho, HermitianOperator(a - b)).c;
      double rhs = 2 * fisher_discord(rho, HermitianOperator(a)).c +
                   2 * fisher_discord(rho, HermitianOperator(b)).c;
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    expect(worst <= 1e-9, "composite parallelogram violated by " + fmt(worst));
    return "max relative deviation " + fmt(worst);
  });

  checker.run("tensor_additivity", [&] {
    StateSampler sampler(opt.seed + 8);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int d1 = sampler.uniform_int(2, 4), d2 = sampler.uniform_int(2, 4);
      DensityMatrix rho1 = sampler.random_density(d1);
      DensityMatrix rho2 = sampler.random_density(d2);
      HermitianOperator h1 = sampler.random_hermitian(d1);
      HermitianOperator h2 = sampler.random_hermitian(d2);
      DensityMatrix joint(tensor_product(rho1.mat(), rho2.mat()));
      ComplexMatrix h = tensor_product(h1.mat(), identity(d2)) +
                        tensor_product(identity(d1), h2.mat());
      double lhs = fisher_discord(joint, HermitianOperator(std::move(h))).c;
      double rhs = fisher_discord(rho1, h1).c + fisher_discord(rho2, h2).c;
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    expect(worst <= 1e-9, "tensor additivity violated by " + fmt(worst));
    return "max relative deviation " + fmt(worst);
  });

  checker.run("direct_sum_additivity", [&] {
    StateSampler sampler(opt.seed + 9);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int blocks = sampler.uniform_int(2, 3);
      RealVector p = sampler.simplex(blocks);
      std::vector<std::tuple<double, DensityMatrix, HermitianOperator>> parts;
      double rhs = 0;
      for (int b = 0; b < blocks; ++b) {
        int dim = sampler.uniform_int(2, 4);
        DensityMatrix rho = sampler.random_density(dim);
        HermitianOperator h = sampler.random_hermitian(dim);
        rhs += p(b) * fisher_discord(rho, h).c;
        parts.emplace_back(p(b), std::move(rho), std::move(h));
      }
      auto [joint_rho, joint_h] = direct_sum_weighted(parts);
      double lhs = fisher_discord(joint_rho, joint_h).c;
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    expect(worst <= 1e-9, "direct-sum additivity violated by " + fmt(worst));
    return "max relative deviation " + fmt(worst);
  });

  checker.run("orbit_invariance", [&] {
    StateSampler sampler(opt.seed + 10);
    std::vector<double> thetas;
    for (int i = 0; i < 8; ++i) thetas.push_back(i * std::numbers::pi / 4.0);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int dim = sampler.uniform_int(2, 8);
      worst = std::max(worst, orbit_invariance_check(sampler.random_density(dim),
                                                     sampler.random_hermitian(dim), thetas));
    }
    expect(worst <= 1e-9, "orbit deviation " + fmt(worst));
    return "max orbit deviation " + fmt(worst);
  });

  checker.run("qubit_iff", [&] {
    StateSampler sampler(opt.seed + 11);
    for (int t = 0; t < trials; ++t) {
      BlochVector r = sampler.random_bloch();
      DensityMatrix rho = qubit_from_bloch(r);
      HermitianOperator h = sampler.random_hermitian(2);
      if (fisher_discord(rho, h).c < 1e-12) {
        double comm = max_abs(commutator(rho.mat(), h.mat()));
        expect(1.0 - r.norm() < 1e-6 || comm < 1e-6,
               "zero discord on a mixed non-commuting qubit pair");
      }
    }
    // Constructed pure and commuting qubit pairs must land at zero.
    double c_pure = fisher_discord(qubit_from_bloch({0, 0, 1}), HermitianOperator(pauli_x())).c;
    double c_comm =
        fisher_discord(qubit_from_bloch({0, 0, 0.6}), HermitianOperator(pauli_z())).c;
    expect(c_pure <= 1e-10 && c_comm <= 1e-10, "constructed zero cases not zero");
    return std::to_string(trials) + " random pairs consistent";
  });

  checker.run("skew_cross_path", [&] {
    StateSampler sampler(opt.seed + 12);
    double worst = 0;
    for (int t = 0; t < law_trials; ++t) {
      int dim = sampler.uniform_int(2, 12);
      DensityMatrix rho = sampler.random_density(dim);
      HermitianOperator h = sampler.random_hermitian(dim);
      worst = std::max(worst,
                       std::abs(skew_information(rho, h) - skew_information_via_sqrt(rho, h)));
    }
    expect(worst <= 1e-9, "spectral vs sqrt path differ by " + fmt(worst));
    return "max path difference " + fmt(worst);
  });

  checker.run("counterexample_zero_discord", [&] {
    FockConfig cfg = opt.fock;
    DensityMatrix rho = counterexample_state(cfg);
    DiscordReport r = fisher_discord(rho, number_op(cfg));
    double comm = max_abs(commutator(rho.mat(), number_op(cfg).mat()));
    expect(r.c < 1e-10, "counterexample discord " + fmt(r.c));
    expect(comm > 0.1, "counterexample commutator norm " + fmt(comm));
    return "C " + fmt(r.c) + ", commutator norm " + fmt(comm);
  });

  checker.run("theta_independence", [&] {
    StateSampler sampler(opt.seed + 13);
    double worst = 0;
    for (int t = 0; t < 5; ++t) {
      RealVector w = sampler.simplex(sampler.uniform_int(2, 6));
      std::vector<double> weights(w.data(), w.data() + w.size());
      auto spread = [&](auto ham_of_theta) {
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < 8; ++i) {
          double theta = i * std::numbers::pi / 4.0;
          double c = fisher_discord(fock_diagonal(weights, opt.fock), ham_of_theta(theta)).c;
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        return hi - lo;
      };
      worst = std::max(worst, spread([&](double th) { return quadrature(th, opt.fock); }));
      worst = std::max(worst, spread([&](double th) { return quad_squared(th, opt.fock); }));
    }
    expect(worst <= 1e-9, "theta spread " + fmt(worst));
    return "max spread over theta " + fmt(worst);
  });

  checker.run("displacement_invariance_x", [&] {
    StateSampler sampler(opt.seed + 14);
    double worst = 0;
    for (int t = 0; t < 5; ++t) {
      double lambda = sampler.uniform(0.05, 0.5);
      Complex z = std::polar(sampler.uniform(0.0, 1.0),
                             sampler.uniform(0.0, 2 * std::numbers::pi));
      double theta = sampler.uniform(0.0, 2 * std::numbers::pi);
      auto base = [&](const FockConfig& cfg) { return thermal(lambda, cfg); };
      auto moved = [&](const FockConfig& cfg) {
        return conjugate_by_unitary(thermal(lambda, cfg), displacement(z, cfg));
      };
      auto ham = [&](const FockConfig& cfg) { return quadrature(theta, cfg); };
      double c0 = fisher_discord_converged(base, ham, opt.fock).c;
      double c1 = fisher_discord_converged(moved, ham, opt.fock).c;
      worst = std::max(worst, std::abs(c1 - c0) / std::max(1.0, c0));
    }
    expect(worst <= 1e-6, "displacement changed C(., X_theta) by " + fmt(worst));
    return "max relative deviation " + fmt(worst);
  });

  checker.run("rotation_covariance_x", [&] {
    StateSampler sampler(opt.seed + 15);
    double worst = 0;
    for (int t = 0; t < 5; ++t) {
      double p = sampler.uniform(0.1, 0.9);
      double theta = sampler.uniform(0.0, 2 * std::numbers::pi);
      double omega = sampler.uniform(0.0, 2 * std::numbers::pi);
      auto base = [&](const FockConfig& cfg) { return superposition_mixture(p, 0, 1, cfg); };
      auto rotated = [&](const FockConfig& cfg) {
        ComplexMatrix u = unitary_from_generator(Complex(0, omega) * number_op(cfg).mat());
        return conjugate_by_unitary(superposition_mixture(p, 0, 1, cfg), u);
      };
      double lhs = fisher_discord_converged(
          rotated, [&](const FockConfig& cfg) { return quadrature(theta + omega, cfg); },
          opt.fock).c;
      double rhs = fisher_discord_converged(
          base, [&](const FockConfig& cfg) { return quadrature(theta, cfg); }, opt.fock).c;
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, rhs));
    }
    expect(worst <= 1e-6, "rotation covariance violated by " + fmt(worst));
    return "max relative deviation " + fmt(worst);
  });

  checker.run("lambda_quad_identity", [&] {
    // C(rho_{p,0,2}, Lambda_theta) = 2 C(rho_{p,0,1}, X_theta) on a grid.
    double worst = 0;
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      for (int i = 0; i < 5; ++i) {
        double theta = i * std::numbers::pi / 5.0;
        double lhs = fisher_discord(superposition_mixture(p, 0, 2, opt.fock),
                                    quad_squared(theta, opt.fock)).c;
        double rhs = 2.0 * fisher_discord(superposition_mixture(p, 0, 1, opt.fock),
                                          quadrature(theta, opt.fock)).c;
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    expect(worst <= 1e-9, "identity violated by " + fmt(worst));
    return "max deviation " + fmt(worst);
  });

  // Oracle equivalence: every closed form against the spectral engine.
  for (Family family : all_families()) {
    std::string name = "oracle_" + std::string(family_name(family));
    checker.run(name, [&, family] {
      StateSampler sampler(opt.seed + 100 + static_cast<std::uint64_t>(family));
      double worst = 0;
      for (int i = 0; i < opt.oracle_points; ++i) {
        FormulaParams prm = detail::sample_family_params(family, i, sampler);
        double closed = evaluate_closed_form(family, prm);
        if (family_name(family) == opt.corrupt_family) closed = closed * 1.01 + 1e-3;
        double spectral = 0;
        if (family == Family::Qubit) {
          HermitianOperator h = sampler.random_hermitian(2);
          closed = qubit_discord_closed(prm.r, h);
          if (family_name(family) == opt.corrupt_family) closed = closed * 1.01 + 1e-3;
          spectral = fisher_discord(qubit_from_bloch(prm.r), h).c;
        } else {
          SpectralPair pair = spectral_pair(family, prm);
          DiscordReport rep = fisher_discord_converged(pair.state, pair.ham, opt.fock);
          expect(rep.converged.value_or(false),
                 "spectral evaluation did not converge at point " + std::to_string(i));
          spectral = rep.c;
        }
        worst = std::max(worst,
                         std::abs(closed - spectral) / std::max(1.0, std::abs(closed)));
      }
      expect(worst <= 1e-6, "closed form deviates from spectral oracle by " + fmt(worst));
      return std::to_string(opt.oracle_points) + " points, max deviation " + fmt(worst);
    });
  }

  return checker.results;
}

}  // namespace qfd
