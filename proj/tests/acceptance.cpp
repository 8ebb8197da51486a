// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "qfd/qfd.hpp"

using namespace qfd;
using std::numbers::pi;
using std::numbers::sqrt2;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool passed, const std::string& detail) {
  std::printf("%s  %02d %-28s %s\n", passed ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!passed) ++failures;
}

/// All named checks from a verification run passed?
bool checks_pass(const std::vector<CheckResult>& results, const std::vector<std::string>& names,
                 std::string& detail) {
  bool ok = true;
  for (const std::string& want : names) {
    bool found = false;
    for (const auto& r : results) {
      if (r.name != want) continue;
      found = true;
      if (!r.passed) {
        ok = false;
        detail += want + ": " + r.detail + "; ";
      }
    }
    if (!found) {
      ok = false;
      detail += want + ": missing; ";
    }
  }
  if (ok) detail = std::to_string(names.size()) + " checks green";
  return ok;
}

struct Shape {
  int sign_changes = 0;
  bool starts_up = false;
  bool strictly_increasing = true;
  bool decreasing = true;
  bool increasing = true;
};

Shape classify(const std::vector<std::vector<double>>& rows, std::size_t col) {
  Shape s;
  int last_sign = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double d = rows[i][col] - rows[i - 1][col];
    if (d <= 0) s.strictly_increasing = false;
    if (d > 1e-13) s.decreasing = false;
    if (d < -1e-13) s.increasing = false;
    int sign = d > 1e-13 ? 1 : (d < -1e-13 ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign == 0) s.starts_up = sign > 0;
    else if (sign != last_sign) ++s.sign_changes;
    last_sign = sign;
  }
  return s;
}

}  // namespace

int main() {
  const FockConfig cfg;

  // Criteria 1, 2, 6, 7 and 8 are the full verification battery at the
  // stated sizes: 500 ordering trials (laws run at 100 each) and 20
  // oracle points per family.
  VerifyOptions opt;
  opt.trials = 500;
  opt.oracle_points = 20;
  std::vector<CheckResult> checks = run_verification(opt);

  {
    std::string detail;
    bool ok = checks_pass(checks, {"ordering_chain"}, detail);
    report(1, "ordering-chain", ok, detail);
  }
  {
    std::string detail;
    bool ok = checks_pass(checks, {"zero_law_pure", "zero_law_commuting", "pure_variance"},
                          detail);
    report(2, "zero-laws", ok, detail);
  }
  {
    DensityMatrix rho = counterexample_state(cfg);
    DiscordReport r = fisher_discord(rho, number_op(cfg));
    double comm = max_abs(commutator(rho.mat(), number_op(cfg).mat()));
    bool ok = r.c < 1e-10 && comm > 0.1;
    report(3, "counterexample", ok,
           "C = " + CsvTable::format_value(r.c) + ", |[rho,N]| = " +
               CsvTable::format_value(comm));
  }
  {
    bool ok = true;
    std::string detail;
    for (int n : {1, 2, 3}) {
      auto state = [n](const FockConfig& c) { return superposition_mixture(0.5, 0, n, c); };
      auto ham = [](const FockConfig& c) { return number_op(c); };
      DiscordReport r = fisher_discord_converged(state, ham, cfg);
      double expected = (sqrt2 - 1.0) * n * n / 16.0;
      if (!r.converged.value_or(false) || std::abs(r.c - expected) > 1e-9) {
        ok = false;
        detail += "number n=" + std::to_string(n) + " off by " +
                  CsvTable::format_value(r.c - expected) + "; ";
      }
    }
    for (int i = 0; i <= 16; ++i) {
      double theta = 2 * pi * i / 16.0;
      auto state1 = [](const FockConfig& c) { return superposition_mixture(0.5, 0, 1, c); };
      auto x = [theta](const FockConfig& c) { return quadrature(theta, c); };
      double got_x = fisher_discord_converged(state1, x, cfg).c;
      double want_x = 0.25 * (sqrt2 - 1.0) * (1.0 + std::sin(theta) * std::sin(theta));
      if (std::abs(got_x - want_x) > 1e-6) {
        ok = false;
        detail += "quadrature theta=" + CsvTable::format_value(theta) + "; ";
      }
      auto state2 = [](const FockConfig& c) { return superposition_mixture(0.5, 0, 2, c); };
      auto lam = [theta](const FockConfig& c) { return quad_squared(theta, c); };
      double got_l = fisher_discord_converged(state2, lam, cfg).c;
      double want_l = 0.25 * (sqrt2 - 1.0) * (3.0 - std::cos(2 * theta));
      if (std::abs(got_l - want_l) > 1e-6) {
        ok = false;
        detail += "quadratic theta=" + CsvTable::format_value(theta) + "; ";
      }
    }
    if (ok) detail = "Eqs. at n in {1,2,3} plus 17-point theta grids";
    report(4, "exact-mixture-values", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    auto expect = [&](const char* tag, const ExtremumResult& r, double arg, double arg_tol,
                      double value, double value_tol) {
      if (std::abs(r.arg - arg) > arg_tol || std::abs(r.value - value) > value_tol) {
        ok = false;
        detail += std::string(tag) + " got (" + CsvTable::format_value(r.arg) + ", " +
                  CsvTable::format_value(r.value) + "); ";
      }
    };
    expect("THERMAL_X", run_extremum(Family::ThermalX, "lambda", 0.01, 0.5, true), lambda0(),
           1e-4, 0.3003, 5e-4);
    expect("TRUNC_THERMAL_X", run_extremum(Family::TruncThermalX, "lambda", 0.01, 0.5, true),
           0.1014, 1e-3, 0.5675, 5e-4);
    expect("TWO_LEVEL_X(lo)", run_extremum(Family::TwoLevelX, "p", 0.01, 0.45, true),
           (2.0 - std::sqrt(3.0)) / 4.0, 1e-6, 0.25, 1e-9);
    expect("TWO_LEVEL_X(hi)", run_extremum(Family::TwoLevelX, "p", 0.55, 0.99, true),
           (2.0 + std::sqrt(3.0)) / 4.0, 1e-6, 0.25, 1e-9);
    ExtremumResult mix_n =
        run_extremum(Family::MixtureN, "p", 0.5, 0.99, true, {{"m", 0}, {"n", 1}});
    if (std::abs(mix_n.arg - 0.8731) > 1e-3) {
      ok = false;
      detail += "MIXTURE_N argmax " + CsvTable::format_value(mix_n.arg) + "; ";
    }
    expect("MIXTURE_X(0)",
           run_extremum(Family::MixtureX, "p", 0.01, 0.5, true,
                        {{"m", 0}, {"n", 1}, {"theta", 0.0}}),
           0.1269, 1e-3, 0.2440, 5e-4);
    expect("MIXTURE_X(pi/4)",
           run_extremum(Family::MixtureX, "p", 0.01, 0.5, true,
                        {{"m", 0}, {"n", 1}, {"theta", pi / 4}}),
           0.1351, 1e-3, 0.2468, 5e-4);
    ExtremumResult gx =
        run_extremum(Family::GaussianX, "abs_zeta", 0.01, 1.5, false,
                     {{"lambda", lambda0()}, {"thetap_zeta", pi / 4}, {"abs_z", 0.0}});
    if (std::abs(gx.arg - 0.5 * std::log(1.0 + sqrt2)) > 1e-3) {
      ok = false;
      detail += "GAUSSIAN_X argmin " + CsvTable::format_value(gx.arg) + "; ";
    }
    if (ok) detail = "8 reported extrema reproduced";
    report(5, "reported-extrema", ok, detail);
  }
  {
    std::vector<std::string> names;
    for (Family f : all_families()) names.push_back("oracle_" + std::string(family_name(f)));
    std::string detail;
    bool ok = checks_pass(checks, names, detail);
    if (ok) detail = std::to_string(names.size()) + " families x 20 points within 1e-6";
    report(6, "closed-form-oracle", ok, detail);
  }
  {
    std::string detail;
    bool ok = checks_pass(checks,
                          {"unitary_covariance", "shift_and_scale", "parallelogram",
                           "composite_parallelogram", "tensor_additivity",
                           "direct_sum_additivity"},
                          detail);
    report(7, "algebraic-laws", ok, detail);
  }
  {
    std::string detail;
    bool ok = checks_pass(checks, {"orbit_invariance"}, detail);
    report(8, "orbit-invariance", ok, detail);
  }
  {
    StateSampler sampler(kDefaultSeed + 900);
    bool ok = true;
    std::string detail = "10000 random pairs + constructed zeros";
    for (int t = 0; t < 10000 && ok; ++t) {
      BlochVector r = sampler.random_bloch();
      DensityMatrix rho = qubit_from_bloch(r);
      HermitianOperator h = sampler.random_hermitian(2);
      if (fisher_discord(rho, h).c < 1e-12) {
        double comm = max_abs(commutator(rho.mat(), h.mat()));
        if (1.0 - r.norm() >= 1e-6 && comm >= 1e-6) {
          ok = false;
          detail = "mixed non-commuting pair with zero discord";
        }
      }
    }
    for (int t = 0; t < 50 && ok; ++t) {
      DensityMatrix pure = sampler.random_pure(2);
      if (fisher_discord(pure, sampler.random_hermitian(2)).c >= 1e-10) {
        ok = false;
        detail = "constructed pure state above 1e-10";
      }
      auto [crho, ch] = sampler.random_commuting_pair(2);
      if (fisher_discord(crho, ch).c >= 1e-10) {
        ok = false;
        detail = "constructed commuting pair above 1e-10";
      }
    }
    report(9, "qubit-iff", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;

    std::map<std::string, CsvTable> tables;
    auto dir = std::filesystem::temp_directory_path() / "qfd_acceptance_figures";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const auto& fig : figure_presets(cfg)) {
      CsvTable table = run_sweep(fig.spec);
      table.write_file(dir / fig.filename);
      tables.emplace(fig.filename, std::move(table));
    }
    // determinism: a full second evaluation must be byte-identical
    for (const auto& fig : figure_presets(cfg)) {
      if (run_sweep(fig.spec).to_string() != tables.at(fig.filename).to_string()) {
        ok = false;
        detail += fig.filename + " not deterministic; ";
      }
    }
    // closed and spectral columns agree on every preset point
    for (const auto& [name, table] : tables) {
      for (const auto& row : table.rows) {
        if (std::abs(row[1] - row[2]) > 1e-6 * std::max(1.0, std::abs(row[1]))) {
          ok = false;
          detail += name + " closed/spectral split at " + CsvTable::format_value(row[0]) + "; ";
          break;
        }
      }
    }
    // fig2: each curve rises then falls with a single sign change
    for (const auto& [name, table] : tables) {
      if (name.rfind("fig2", 0) != 0) continue;
      Shape s = classify(table.rows, 1);
      if (!(s.starts_up && s.sign_changes == 1)) {
        ok = false;
        detail += name + " is not rise-then-fall; ";
      }
    }
    // fig6: theta'_zeta = 0 decreases, pi/2 and pi increase in |zeta|
    if (!classify(tables.at("fig6_tpz_0.csv").rows, 1).decreasing) {
      ok = false;
      detail += "fig6 theta'=0 not decreasing; ";
    }
    for (const char* name : {"fig6_tpz_pi_2.csv", "fig6_tpz_pi.csv"}) {
      if (!classify(tables.at(name).rows, 1).increasing) {
        ok = false;
        detail += std::string(name) + " not increasing; ";
      }
    }
    // THERMAL_L strictly increases over (0,1)
    SweepSpec tl;
    tl.family = Family::ThermalL;
    tl.param = "lambda";
    tl.start = 0.01;
    tl.stop = 0.95;
    tl.count = 95;
    tl.cfg = cfg;
    if (!classify(run_sweep(tl).rows, 1).strictly_increasing) {
      ok = false;
      detail += "THERMAL_L not strictly increasing; ";
    }
    // SQZ_THERMAL_N increases in |zeta| and in lambda
    for (const char* param : {"abs_zeta", "lambda"}) {
      SweepSpec sq;
      sq.family = Family::SqzThermalN;
      sq.param = param;
      sq.start = 0.05;
      sq.stop = 0.9;
      sq.count = 40;
      sq.fixed = std::string(param) == "lambda" ? ParamBag{{"abs_zeta", 0.5}}
                                                : ParamBag{{"lambda", 0.3}};
      sq.cfg = cfg;
      if (!classify(run_sweep(sq).rows, 1).strictly_increasing) {
        ok = false;
        detail += std::string("SQZ_THERMAL_N not increasing in ") + param + "; ";
      }
    }
    if (ok)
      detail = std::to_string(tables.size()) + " preset files deterministic, shapes hold (" +
               dir.string() + ")";
    report(10, "figure-regeneration", ok, detail);
  }

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
