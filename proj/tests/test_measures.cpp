#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "qfd/measures.hpp"
#include "qfd/random_states.hpp"
#include "qfd/verify.hpp"

using namespace qfd;
using std::numbers::pi;

namespace {
DensityMatrix diag_rho(double a, double b) {
  ComplexMatrix m(2, 2);
  m << a, 0, 0, b;
  return DensityMatrix(std::move(m));
}
}  // namespace

TEST_CASE("pure state reduces to the variance") {
  ComplexMatrix vac(2, 2);
  vac << 1, 0, 0, 0;
  DensityMatrix rho(std::move(vac));
  HermitianOperator sx(pauli_x());
  DiscordReport r = fisher_discord(rho, sx);
  REQUIRE(r.i_w == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(r.i_f == Catch::Approx(1.0).margin(1e-12));
  REQUIRE(r.c <= 1e-12);
  REQUIRE(r.rank == 1);
}

TEST_CASE("maximally mixed state carries no information") {
  DensityMatrix rho = diag_rho(0.5, 0.5);
  for (const ComplexMatrix& h : {pauli_x(), pauli_y(), pauli_z()}) {
    DiscordReport r = fisher_discord(rho, HermitianOperator(h));
    REQUIRE(r.i_f <= 1e-12);
    REQUIRE(r.i_w <= 1e-12);
    REQUIRE(r.c <= 1e-12);
  }
}

TEST_CASE("the reference qubit triple") {
  DiscordReport r = fisher_discord(diag_rho(0.8, 0.2), HermitianOperator(pauli_x()));
  REQUIRE(r.i_f == Catch::Approx(0.36).margin(1e-12));
  REQUIRE(r.i_w == Catch::Approx(0.2).margin(1e-12));
  REQUIRE(r.c == Catch::Approx(0.16).margin(1e-12));

  REQUIRE(skew_information(diag_rho(0.8, 0.2), HermitianOperator(pauli_x())) ==
          Catch::Approx(0.2).margin(1e-12));
  REQUIRE(sld_fisher(diag_rho(0.8, 0.2), HermitianOperator(pauli_x())) ==
          Catch::Approx(0.36).margin(1e-12));
}

TEST_CASE("commuting pairs give zero") {
  DiscordReport r = fisher_discord(diag_rho(0.8, 0.2), HermitianOperator(pauli_z()));
  REQUIRE(r.i_f <= 1e-12);
  REQUIRE(r.i_w <= 1e-12);
  REQUIRE(r.c <= 1e-12);
}

TEST_CASE("skew information agrees with the square-root path") {
  StateSampler sampler(31);
  for (int t = 0; t < 25; ++t) {
    int dim = sampler.uniform_int(2, 12);
    DensityMatrix rho = sampler.random_density(dim);
    HermitianOperator h = sampler.random_hermitian(dim);
    REQUIRE(std::abs(skew_information(rho, h) - skew_information_via_sqrt(rho, h)) <= 1e-9);
  }
}

TEST_CASE("sld operator") {
  DensityMatrix rho = diag_rho(0.8, 0.2);
  HermitianOperator sx(pauli_x());
  ComplexMatrix l = sld_operator(rho, sx).mat();
  REQUIRE(max_abs(l - 1.2 * pauli_y()) <= 1e-12);

  double quarter_trace = 0.25 * (rho.mat() * l * l).trace().real();
  REQUIRE(quarter_trace == Catch::Approx(sld_fisher(rho, sx)).margin(1e-8));

  REQUIRE(max_abs(sld_operator(rho, HermitianOperator(pauli_z())).mat()) <= 1e-12);

  StateSampler sampler(32);
  for (int t = 0; t < 10; ++t) {
    int dim = sampler.uniform_int(2, 9);
    DensityMatrix mixed = sampler.random_density(dim);
    HermitianOperator h = sampler.random_hermitian(dim);
    ComplexMatrix lr = sld_operator(mixed, h).mat();
    double qt = 0.25 * (mixed.mat() * lr * lr).trace().real();
    REQUIRE(qt == Catch::Approx(sld_fisher(mixed, h)).margin(1e-8));
  }
}

TEST_CASE("evolve") {
  StateSampler sampler(33);
  DensityMatrix rho = sampler.random_density(4);
  HermitianOperator h = sampler.random_hermitian(4);
  REQUIRE(max_abs(evolve(rho, h, 0.0).mat() - rho.mat()) <= 1e-12);

  auto [crho, ch] = sampler.random_commuting_pair(5);
  REQUIRE(max_abs(evolve(crho, ch, 1.7).mat() - crho.mat()) <= 1e-10);

  // e^{-i theta sigma_z} advances the equatorial angle by 2 theta:
  // |+> reaches |i> at theta = pi/4 and |-> at theta = pi/2.
  ComplexMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  DensityMatrix rho_plus(std::move(plus));
  HermitianOperator sz(pauli_z());

  ComplexMatrix at_quarter = evolve(rho_plus, sz, pi / 4).mat();
  ComplexMatrix i_state(2, 2);
  i_state << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5;
  REQUIRE(max_abs(at_quarter - i_state) <= 1e-12);

  ComplexMatrix at_half = evolve(rho_plus, sz, pi / 2).mat();
  ComplexMatrix minus(2, 2);
  minus << 0.5, -0.5, -0.5, 0.5;
  REQUIRE(max_abs(at_half - minus) <= 1e-12);
}

TEST_CASE("orbit invariance") {
  std::vector<double> thetas;
  for (int i = 0; i < 8; ++i) thetas.push_back(i * pi / 4);

  StateSampler sampler(34);
  for (int t = 0; t < 10; ++t) {
    int dim = sampler.uniform_int(2, 6);
    REQUIRE(orbit_invariance_check(sampler.random_density(dim), sampler.random_hermitian(dim),
                                   thetas) <= 1e-9);
  }

  auto [crho, ch] = sampler.random_commuting_pair(4);
  REQUIRE(orbit_invariance_check(crho, ch, thetas) <= 1e-12);

  DensityMatrix rho = diag_rho(0.8, 0.2);
  HermitianOperator sx(pauli_x());
  DiscordReport moved = fisher_discord(evolve(rho, sx, pi / 3), sx);
  REQUIRE(moved.i_f == Catch::Approx(0.36).margin(1e-12));
  REQUIRE(moved.i_w == Catch::Approx(0.2).margin(1e-12));
  REQUIRE(moved.c == Catch::Approx(0.16).margin(1e-12));
}

TEST_CASE("bipartite monotonicity probe") {
  StateSampler sampler(35);
  DensityMatrix rho1 = sampler.random_density(3);
  DensityMatrix rho2 = sampler.random_density(2);
  HermitianOperator h1 = sampler.random_hermitian(3);

  DensityMatrix product(tensor_product(rho1.mat(), rho2.mat()));
  REQUIRE(std::abs(bipartite_monotonicity_probe(product, 3, 2, h1)) <= 1e-9);

  // a pure entangled global state has zero discord, so the gap is -C(rho_1, H_1)
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = std::sqrt(0.7);
  psi(3) = std::sqrt(0.3);
  DensityMatrix pure(ComplexMatrix(psi * psi.adjoint()));
  HermitianOperator hq = sampler.random_hermitian(2);
  double gap = bipartite_monotonicity_probe(pure, 2, 2, hq);
  double reduced_c = fisher_discord(partial_trace(pure, 2, 2, 1), hq).c;
  REQUIRE(gap == Catch::Approx(-reduced_c).margin(1e-9));

  // random mixed states: the probe just reports a finite number
  DensityMatrix mixed = sampler.random_density(4);
  double g = bipartite_monotonicity_probe(mixed, 2, 2, hq);
  REQUIRE(std::isfinite(g));

  REQUIRE_THROWS_AS(bipartite_monotonicity_probe(mixed, 2, 2, h1), DimensionMismatch);
}

TEST_CASE("degenerate subspaces do not affect the sums") {
  StateSampler sampler(36);
  ComplexMatrix v = sampler.haar_unitary(4);
  RealVector lam(4);
  lam << 0.4, 0.4, 0.15, 0.05;
  ComplexMatrix rho = v * lam.asDiagonal() * v.adjoint();
  rho = 0.5 * (rho + ComplexMatrix(rho.adjoint()));
  DensityMatrix state{ComplexMatrix(rho)};
  HermitianOperator h = sampler.random_hermitian(4);
  DiscordReport base = fisher_discord(state, h);

  // rotating the eigenbasis inside the degenerate block leaves rho unchanged
  ComplexMatrix u2 = sampler.haar_unitary(2);
  ComplexMatrix block = identity(4);
  block.topLeftCorner(2, 2) = u2;
  ComplexMatrix v2 = v * block;
  ComplexMatrix rho2 = v2 * lam.asDiagonal() * v2.adjoint();
  rho2 = 0.5 * (rho2 + ComplexMatrix(rho2.adjoint()));
  DiscordReport again = fisher_discord(DensityMatrix{ComplexMatrix(rho2)}, h);

  REQUIRE(again.i_f == Catch::Approx(base.i_f).margin(1e-10));
  REQUIRE(again.i_w == Catch::Approx(base.i_w).margin(1e-10));
  REQUIRE(again.c == Catch::Approx(base.c).margin(1e-10));
}

TEST_CASE("converged reports") {
  FockConfig cfg;
  auto diag_state = [](const FockConfig& c) { return fock_diagonal({0.5, 0.3, 0.2}, c); };
  auto number = [](const FockConfig& c) { return number_op(c); };
  DiscordReport r = fisher_discord_converged(diag_state, number, cfg);
  REQUIRE(r.converged.value());
  REQUIRE(r.truncation_dim.value() == 64);
  REQUIRE(r.c <= 1e-12);

  // a heavily occupied state cannot converge below its support
  FockConfig cramped;
  cramped.dim = 16;
  cramped.max_dim = 32;
  auto big = [](const FockConfig& c) { return gaussian(0.8, Complex(1.0, 0), 0.0, c); };
  DiscordReport stuck = fisher_discord_converged(big, number, cramped);
  REQUIRE_FALSE(stuck.converged.value());
  REQUIRE(stuck.truncation_dim.value() == 32);
}

TEST_CASE("dimension mismatches are rejected") {
  StateSampler sampler(37);
  DensityMatrix rho = sampler.random_density(3);
  HermitianOperator h = sampler.random_hermitian(4);
  REQUIRE_THROWS_AS(fisher_discord(rho, h), DimensionMismatch);
  REQUIRE_THROWS_AS(skew_information(rho, h), DimensionMismatch);
  REQUIRE_THROWS_AS(sld_operator(rho, h), DimensionMismatch);
  REQUIRE_THROWS_AS(evolve(rho, h, 0.1), DimensionMismatch);
}

TEST_CASE("verification suite passes at reduced size") {
  VerifyOptions opt;
  opt.trials = 40;
  opt.oracle_points = 3;
  std::vector<CheckResult> results = run_verification(opt);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("verification names a corrupted family") {
  VerifyOptions opt;
  opt.trials = 2;
  opt.oracle_points = 2;
  opt.corrupt_family = "THERMAL_L";
  std::vector<CheckResult> results = run_verification(opt);
  REQUIRE_FALSE(all_passed(results));
  bool named = false;
  for (const auto& r : results)
    if (!r.passed) {
      REQUIRE(r.name == "oracle_THERMAL_L");
      named = true;
    }
  REQUIRE(named);
}
