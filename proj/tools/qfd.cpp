// Command-line surface: single evaluations, figure-data sweeps, extremum
// searches and the verification suite.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfd/qfd.hpp"

namespace {

struct FockFlags {
  int dim = 32;
  int max_dim = 512;
  double conv_tol = 1e-8;

  qfd::FockConfig config() const {
    qfd::FockConfig cfg;
    cfg.dim = dim;
    cfg.max_dim = max_dim;
    cfg.conv_tol = conv_tol;
    return cfg;
  }
};

void add_fock_flags(CLI::App* cmd, FockFlags& flags) {
  cmd->add_option("--dim", flags.dim, "starting Fock truncation dimension");
  cmd->add_option("--max-dim", flags.max_dim, "largest truncation dimension");
  cmd->add_option("--conv-tol", flags.conv_tol, "relative convergence tolerance");
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format (csv)");
}

void require_csv(const std::string& format) {
  if (format != "csv") throw qfd::ParseError("unsupported format '" + format + "'");
}

qfd::ParamBag parse_fixed(const std::vector<std::string>& fixes) {
  qfd::ParamBag bag;
  for (const auto& fix : fixes) {
    auto eq = fix.find('=');
    if (eq == std::string::npos)
      throw qfd::ParseError("--fix expects key=value, got '" + fix + "'");
    bag[fix.substr(0, eq)] = qfd::parse_double(fix.substr(eq + 1));
  }
  return bag;
}

qfd::Family parse_family(const std::string& name) {
  auto family = qfd::family_from_name(name);
  if (!family) throw qfd::ParseError("unknown family '" + name + "'");
  return *family;
}

void print_report(const qfd::DiscordReport& rep) {
  auto line = [](const char* key, double v) {
    std::printf("%s=%.17g\n", key, v);
  };
  line("i_f", rep.i_f);
  line("i_w", rep.i_w);
  line("c", rep.c);
  std::printf("rank=%d\n", rep.rank);
  line("min_eigenvalue", rep.min_eigenvalue);
  if (rep.truncation_dim) std::printf("truncation_dim=%d\n", *rep.truncation_dim);
  if (rep.converged) std::printf("converged=%s\n", *rep.converged ? "true" : "false");
}

int run(int argc, char** argv) {
  CLI::App app{"Fisher discord toolkit: SLD Fisher information, Wigner-Yanase skew "
               "information and their difference for finite and truncated bosonic states"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "evaluate one state/Hamiltonian pair");
  std::string state_spec, ham_spec;
  FockFlags compute_fock;
  compute->add_option("--state", state_spec, "state spec, e.g. thermal:lambda=0.3")->required();
  compute->add_option("--ham", ham_spec, "Hamiltonian spec, e.g. number or pauli:x")->required();
  add_fock_flags(compute, compute_fock);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "grid sweep writing figure-style CSV");
  std::string sweep_family, sweep_state, sweep_ham, sweep_param, sweep_out, sweep_weights;
  std::string sweep_format = "csv";
  std::vector<std::string> sweep_fixes;
  double sweep_start = 0, sweep_stop = 0;
  int sweep_count = 0, sweep_threads = 0;
  FockFlags sweep_fock;
  sweep->add_option("--family", sweep_family, "closed-form family, e.g. THERMAL_X");
  sweep->add_option("--state", sweep_state, "state spec (alternative to --family)");
  sweep->add_option("--ham", sweep_ham, "Hamiltonian spec (with --state)");
  sweep->add_option("--param", sweep_param, "swept parameter name")->required();
  sweep->add_option("--start", sweep_start)->required();
  sweep->add_option("--stop", sweep_stop)->required();
  sweep->add_option("--count", sweep_count)->required();
  sweep->add_option("--fix", sweep_fixes, "fixed parameter key=value (repeatable)");
  sweep->add_option("--weights", sweep_weights, "diagonal weights, e.g. 0.5;0.3;0.2");
  sweep->add_option("--out", sweep_out, "output path (default: stdout)");
  sweep->add_option("--threads", sweep_threads, "worker threads (0 = hardware)");
  add_fock_flags(sweep, sweep_fock);
  add_format_flag(sweep, sweep_format);

  // extremum
  auto* extremum = app.add_subcommand("extremum", "golden-section extremum of a closed form");
  std::string ext_family, ext_param, ext_mode = "max", ext_weights;
  std::vector<std::string> ext_fixes;
  double ext_lo = 0, ext_hi = 0;
  extremum->add_option("--family", ext_family)->required();
  extremum->add_option("--param", ext_param)->required();
  extremum->add_option("--lo", ext_lo)->required();
  extremum->add_option("--hi", ext_hi)->required();
  extremum->add_option("--mode", ext_mode, "max or min");
  extremum->add_option("--fix", ext_fixes, "fixed parameter key=value (repeatable)");
  extremum->add_option("--weights", ext_weights, "diagonal weights if the family needs them");

  // verify
  auto* verify = app.add_subcommand("verify", "run the invariant and oracle suites");
  std::uint64_t verify_seed = qfd::kDefaultSeed;
  int verify_trials = 500, verify_points = 20;
  std::string corrupt_family;
  FockFlags verify_fock;
  verify->add_option("--seed", verify_seed, "random-suite seed");
  verify->add_option("--trials", verify_trials, "random trials for the ordering chain");
  verify->add_option("--oracle-points", verify_points, "samples per formula family");
  verify->add_option("--corrupt-family", corrupt_family,
                     "test hook: perturb this family's closed form")
      ->group("");
  add_fock_flags(verify, verify_fock);

  // figures
  auto* figures = app.add_subcommand("figures", "regenerate all eight figure presets");
  std::string fig_dir;
  std::string fig_format = "csv";
  int fig_threads = 0;
  FockFlags fig_fock;
  figures->add_option("--out-dir", fig_dir, "output directory")->required();
  figures->add_option("--threads", fig_threads, "worker threads (0 = hardware)");
  add_fock_flags(figures, fig_fock);
  add_format_flag(figures, fig_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (compute->parsed()) {
    qfd::ComputeRequest req{qfd::parse_spec_string(state_spec), qfd::parse_spec_string(ham_spec),
                            compute_fock.config()};
    print_report(qfd::run_compute(req));
    return 0;
  }

  if (sweep->parsed()) {
    require_csv(sweep_format);
    qfd::SweepSpec spec;
    if (!sweep_family.empty()) {
      spec.family = parse_family(sweep_family);
    } else {
      if (sweep_state.empty() || sweep_ham.empty())
        throw qfd::ParseError("sweep needs --family or both --state and --ham");
      spec.state = qfd::parse_spec_string(sweep_state);
      spec.ham = qfd::parse_spec_string(sweep_ham);
    }
    spec.fixed = parse_fixed(sweep_fixes);
    if (!sweep_weights.empty()) spec.weights = qfd::parse_weights(sweep_weights);
    spec.param = sweep_param;
    spec.start = sweep_start;
    spec.stop = sweep_stop;
    spec.count = sweep_count;
    spec.cfg = sweep_fock.config();
    spec.threads = sweep_threads;
    qfd::CsvTable table = qfd::run_sweep(spec);
    if (sweep_out.empty())
      std::fputs(table.to_string().c_str(), stdout);
    else
      table.write_file(sweep_out);
    return 0;
  }

  if (extremum->parsed()) {
    if (ext_mode != "max" && ext_mode != "min")
      throw qfd::ParseError("--mode must be max or min");
    std::vector<double> weights;
    if (!ext_weights.empty()) weights = qfd::parse_weights(ext_weights);
    qfd::ExtremumResult r =
        qfd::run_extremum(parse_family(ext_family), ext_param, ext_lo, ext_hi,
                          ext_mode == "max", parse_fixed(ext_fixes), weights);
    std::printf("argopt=%.17g\nvalue=%.17g\n", r.arg, r.value);
    return 0;
  }

  if (verify->parsed()) {
    qfd::VerifyOptions opt;
    opt.seed = verify_seed;
    opt.trials = verify_trials;
    opt.oracle_points = verify_points;
    opt.fock = verify_fock.config();
    opt.corrupt_family = corrupt_family;
    std::vector<qfd::CheckResult> results = qfd::run_verification(opt);
    qfd::print_table(std::cout, results);
    bool ok = qfd::all_passed(results);
    std::cout << (ok ? "all checks passed" : "FAILURES present") << "\n";
    return ok ? 0 : 1;
  }

  if (figures->parsed()) {
    require_csv(fig_format);
    auto written = qfd::run_figures(fig_dir, fig_fock.config(), fig_threads);
    for (const auto& path : written) std::printf("%s\n", path.string().c_str());
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qfd::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const qfd::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "unexpected error: %s\n", e.what());
    return 1;
  }
}
