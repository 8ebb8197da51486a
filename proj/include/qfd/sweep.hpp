#pragma once

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qfd/closed_forms.hpp"

namespace qfd {

// -- one-dimensional extremum search -----------------------------------------

struct ExtremumResult {
  double arg = 0;
  double value = 0;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// Stops when the bracket is narrower than bracket_tol.
template <typename F>
ExtremumResult golden_section_max(F&& f, double lo, double hi, double bracket_tol = 1e-7) {
  if (!(lo < hi)) throw ParamOutOfDomain("golden_section_max: need lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > bracket_tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double x = 0.5 * (a + b);
  return {x, f(x)};
}

template <typename F>
ExtremumResult golden_section_min(F&& f, double lo, double hi, double bracket_tol = 1e-7) {
  ExtremumResult r = golden_section_max([&](double x) { return -f(x); }, lo, hi, bracket_tol);
  return {r.arg, -r.value};
}

// -- CSV output ---------------------------------------------------------------

/// Deterministic CSV: '#'-prefixed provenance comments, one header row,
/// decimal values at 17 significant digits, ',' separators, '\n' endings.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  static std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& c : comments) out += "# " + c + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      out += (i ? "," : "") + columns[i];
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out += (i ? "," : "") + format_value(row[i]);
      out += "\n";
    }
    return out;
  }

  void write_file(const std::filesystem::path& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path.string() + "' for writing");
    f << to_string();
  }
};

// -- spec mini-language -------------------------------------------------------

/// "name:key=value,key=value" with complex values written modulus@argradians.
/// bloch and pauli take positional arguments ("bloch:0,0,1", "pauli:x").
struct KeyValueSpec {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> kv;
  std::vector<std::string> positional;

  std::string get(const std::string& key) const {
    for (const auto& [k, v] : kv)
      if (k == key) return v;
    throw ParseError("missing key '" + key + "' in spec '" + kind + "'");
  }
  std::optional<std::string> find(const std::string& key) const {
    for (const auto& [k, v] : kv)
      if (k == key) return v;
    return std::nullopt;
  }
  void set(const std::string& key, const std::string& value) {
    for (auto& [k, v] : kv)
      if (k == key) {
        v = value;
        return;
      }
    kv.emplace_back(key, value);
  }
  std::string to_string() const {
    std::string out = kind;
    char sep = ':';
    for (const auto& p : positional) {
      out += sep + p;
      sep = ',';
    }
    for (const auto& [k, v] : kv) {
      out += sep + k + "=" + v;
      sep = ',';
    }
    return out;
  }
};

inline double parse_double(std::string_view s) {
  std::string str(s);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(str, &used);
  } catch (const std::exception&) {
    throw ParseError("cannot parse number '" + str + "'");
  }
  if (used != str.size()) throw ParseError("trailing junk in number '" + str + "'");
  return v;
}

inline int parse_int(std::string_view s) {
  double v = parse_double(s);
  int i = static_cast<int>(std::lround(v));
  if (std::abs(v - i) > 1e-9) throw ParseError("expected an integer, got '" + std::string(s) + "'");
  return i;
}

/// "1@0.785398" -> modulus 1 at argument 0.785398 rad; a bare number is a
/// nonnegative real (argument 0).
inline Complex parse_complex(std::string_view s) {
  auto at = s.find('@');
  if (at == std::string_view::npos) return Complex(parse_double(s), 0.0);
  double mod = parse_double(s.substr(0, at));
  double arg = parse_double(s.substr(at + 1));
  return std::polar(mod, arg);
}

/// Semicolon-separated probability vector, e.g. "0.5;0.3;0.2".
inline std::vector<double> parse_weights(std::string_view s) {
  std::vector<double> w;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(';', pos);
    if (next == std::string_view::npos) next = s.size();
    w.push_back(parse_double(s.substr(pos, next - pos)));
    pos = next + 1;
    if (next == s.size()) break;
  }
  if (w.empty()) throw ParseError("empty weights list");
  return w;
}

inline KeyValueSpec parse_spec_string(std::string_view s) {
  KeyValueSpec spec;
  auto colon = s.find(':');
  spec.kind = std::string(s.substr(0, colon));
  if (spec.kind.empty()) throw ParseError("empty spec name");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = s.substr(colon + 1);
  if (rest.empty()) throw ParseError("empty parameter list in '" + std::string(s) + "'");
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    std::size_t next = rest.find(',', pos);
    if (next == std::string_view::npos) next = rest.size();
    std::string_view item = rest.substr(pos, next - pos);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      spec.positional.emplace_back(item);
    } else {
      std::string key(item.substr(0, eq));
      if (key.empty()) throw ParseError("empty key in '" + std::string(s) + "'");
      spec.kv.emplace_back(key, std::string(item.substr(eq + 1)));
    }
    pos = next + 1;
    if (next == rest.size()) break;
  }
  return spec;
}

// -- state / Hamiltonian builders from specs ----------------------------------

inline bool spec_is_discrete(const KeyValueSpec& s) { return s.kind == "bloch"; }

inline StateBuilder make_state_builder(const KeyValueSpec& s) {
  const std::string kind = s.kind;
  if (kind == "thermal") {
    double lambda = parse_double(s.get("lambda"));
    return [lambda](const FockConfig& cfg) { return thermal(lambda, cfg); };
  }
  if (kind == "trunc_thermal") {
    double lambda = parse_double(s.get("lambda"));
    return [lambda](const FockConfig& cfg) { return truncated_thermal(lambda, cfg); };
  }
  if (kind == "pa_thermal") {
    double lambda = parse_double(s.get("lambda"));
    return [lambda](const FockConfig& cfg) { return photon_added_thermal(lambda, cfg); };
  }
  if (kind == "fock_diag") {
    std::vector<double> w = parse_weights(s.get("weights"));
    return [w](const FockConfig& cfg) { return fock_diagonal(w, cfg); };
  }
  if (kind == "fock") {
    int n = parse_int(s.get("n"));
    return [n](const FockConfig& cfg) {
      std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
      w.back() = 1.0;
      return fock_diagonal(w, cfg);
    };
  }
  if (kind == "mixture") {
    double p = parse_double(s.get("p"));
    int m = parse_int(s.get("m"));
    int n = parse_int(s.get("n"));
    return [p, m, n](const FockConfig& cfg) { return superposition_mixture(p, m, n, cfg); };
  }
  if (kind == "gaussian") {
    double lambda = parse_double(s.get("lambda"));
    Complex zeta = s.find("zeta") ? parse_complex(*s.find("zeta")) : Complex(0, 0);
    Complex z = s.find("z") ? parse_complex(*s.find("z")) : Complex(0, 0);
    return [lambda, zeta, z](const FockConfig& cfg) { return gaussian(lambda, zeta, z, cfg); };
  }
  if (kind == "counterexample") {
    return [](const FockConfig& cfg) { return counterexample_state(cfg); };
  }
  if (kind == "bloch") {
    if (s.positional.size() != 3)
      throw ParseError("bloch takes three components, e.g. bloch:0,0,0.6");
    BlochVector r{parse_double(s.positional[0]), parse_double(s.positional[1]),
                  parse_double(s.positional[2])};
    return [r](const FockConfig&) { return qubit_from_bloch(r); };
  }
  throw ParseError("unknown state kind '" + kind + "'");
}

inline OperatorBuilder make_operator_builder(const KeyValueSpec& s) {
  const std::string kind = s.kind;
  if (kind == "number") return [](const FockConfig& cfg) { return number_op(cfg); };
  if (kind == "quadrature") {
    double theta = s.find("theta") ? parse_double(*s.find("theta")) : 0.0;
    return [theta](const FockConfig& cfg) { return quadrature(theta, cfg); };
  }
  if (kind == "quad_squared") {
    double theta = s.find("theta") ? parse_double(*s.find("theta")) : 0.0;
    return [theta](const FockConfig& cfg) { return quad_squared(theta, cfg); };
  }
  if (kind == "ladder") {
    int l = parse_int(s.get("l"));
    double theta = s.find("theta") ? parse_double(*s.find("theta")) : 0.0;
    return [l, theta](const FockConfig& cfg) { return ladder_power(l, theta, cfg); };
  }
  if (kind == "pauli") {
    if (s.positional.size() != 1) throw ParseError("pauli takes one axis, e.g. pauli:x");
    const std::string& axis = s.positional[0];
    ComplexMatrix m;
    if (axis == "x") m = pauli_x();
    else if (axis == "y") m = pauli_y();
    else if (axis == "z") m = pauli_z();
    else throw ParseError("unknown Pauli axis '" + axis + "'");
    return [m](const FockConfig&) { return HermitianOperator(m); };
  }
  throw ParseError("unknown Hamiltonian kind '" + kind + "'");
}

// -- formula parameter bags ----------------------------------------------------

/// Scalar parameter bag used by the CLI and the sweep grid. Derived angle
/// keys are translated to concrete (theta, arg z, arg zeta) values:
///   thetap_zeta = 2 theta - arg zeta   (quadrature families)
///   theta_z     = theta - 2 arg z      (quadratic families)
///   theta_zeta  = theta - arg zeta     (quadratic families)
using ParamBag = std::map<std::string, double>;

inline const std::set<std::string>& known_param_keys() {
  static const std::set<std::string> keys{
      "lambda", "p",        "theta",   "m",          "n",        "k",      "l",
      "abs_z",  "arg_z",    "abs_zeta", "arg_zeta",  "thetap_zeta", "theta_z",
      "theta_zeta", "r1",   "r2",      "r3",         "abs_h12",  "arg_h12"};
  return keys;
}

inline FormulaParams resolve_params(const ParamBag& bag, std::vector<double> weights = {}) {
  for (const auto& [key, value] : bag) {
    (void)value;
    if (!known_param_keys().count(key))
      throw ParamOutOfDomain("unknown parameter '" + key + "'");
  }
  auto get = [&](const char* key, double fallback) {
    auto it = bag.find(key);
    return it == bag.end() ? fallback : it->second;
  };
  auto has = [&](const char* key) { return bag.count(key) != 0; };

  FormulaParams prm;
  prm.lambda = get("lambda", 0.0);
  prm.p = get("p", 0.0);
  prm.m = static_cast<int>(std::lround(get("m", 0)));
  prm.n = static_cast<int>(std::lround(get("n", 0)));
  prm.k = static_cast<int>(std::lround(get("k", 1)));
  prm.l = static_cast<int>(std::lround(get("l", 1)));
  prm.r = BlochVector{get("r1", 0.0), get("r2", 0.0), get("r3", 0.0)};
  prm.h12 = std::polar(get("abs_h12", 0.0), get("arg_h12", 0.0));
  prm.weights = std::move(weights);

  double arg_z = get("arg_z", 0.0);
  double arg_zeta = get("arg_zeta", 0.0);
  double theta = get("theta", 0.0);
  if (has("theta_z")) theta = get("theta_z", 0.0) + 2.0 * arg_z;
  if (has("thetap_zeta")) theta = 0.5 * (get("thetap_zeta", 0.0) + arg_zeta);
  if (has("theta_zeta")) arg_zeta = theta - get("theta_zeta", 0.0);
  prm.theta = theta;
  prm.z = std::polar(get("abs_z", 0.0), arg_z);
  prm.zeta = std::polar(get("abs_zeta", 0.0), arg_zeta);
  return prm;
}

/// Scalar keys a family's formula actually reads; sweeps and extremum
/// searches only accept these.
inline std::set<std::string> family_param_keys(Family f) {
  switch (f) {
    case Family::Qubit: return {"r1", "r2", "r3", "abs_h12", "arg_h12"};
    case Family::FockDiagN:
    case Family::FockDiagX:
    case Family::FockDiagL: return {};
    case Family::DispFockDiagN: return {"abs_z", "arg_z"};
    case Family::SqzFockDiagN: return {"abs_zeta", "arg_zeta"};
    case Family::DispThermalN: return {"lambda", "abs_z", "arg_z"};
    case Family::SqzThermalN: return {"lambda", "abs_zeta", "arg_zeta"};
    case Family::GaussianN: return {"lambda", "abs_z", "arg_z", "abs_zeta", "arg_zeta"};
    case Family::MixtureN: return {"p", "m", "n"};
    case Family::SqzFockDiagX: return {"theta", "abs_zeta", "arg_zeta", "thetap_zeta"};
    case Family::TwoLevelX: return {"p", "theta"};
    case Family::RhoPkLPower: return {"p", "k", "l", "theta"};
    case Family::ThermalX:
    case Family::TruncThermalX:
    case Family::PaThermalX: return {"lambda", "theta"};
    case Family::GaussianX:
      return {"lambda", "theta", "abs_z", "arg_z", "abs_zeta", "arg_zeta", "thetap_zeta"};
    case Family::MixtureX:
    case Family::MixtureL: return {"p", "m", "n", "theta"};
    case Family::DispFockDiagL: return {"abs_z", "arg_z", "theta"};
    case Family::SqzFockDiagL: return {"theta", "abs_zeta", "arg_zeta"};
    case Family::RhoPkL: return {"p", "k", "theta"};
    case Family::ThermalL: return {"lambda", "theta"};
    case Family::DispThermalL: return {"lambda", "abs_z", "arg_z", "theta"};
    case Family::SqzThermalL: return {"lambda", "abs_zeta", "arg_zeta", "theta"};
    case Family::GaussianL:
      return {"lambda", "abs_z", "arg_z", "abs_zeta", "arg_zeta", "theta", "theta_z",
              "theta_zeta"};
    case Family::MixtureHalfX:
    case Family::MixtureHalfL: return {"m", "n", "theta"};
  }
  return {};
}

inline bool family_takes_weights(Family f) {
  switch (f) {
    case Family::FockDiagN:
    case Family::DispFockDiagN:
    case Family::SqzFockDiagN:
    case Family::FockDiagX:
    case Family::SqzFockDiagX:
    case Family::FockDiagL:
    case Family::DispFockDiagL:
    case Family::SqzFockDiagL: return true;
    default: return false;
  }
}

// -- compute ------------------------------------------------------------------

struct ComputeRequest {
  KeyValueSpec state;
  KeyValueSpec ham;
  FockConfig cfg;
};

/// Evaluate one (state, Hamiltonian) pair. Discrete states are exact, so
/// they skip the truncation ladder.
inline DiscordReport run_compute(const ComputeRequest& req) {
  StateBuilder state = make_state_builder(req.state);
  OperatorBuilder ham = make_operator_builder(req.ham);
  if (spec_is_discrete(req.state)) {
    DensityMatrix rho = state(req.cfg);
    DiscordReport rep = fisher_discord(rho, ham(req.cfg));
    rep.truncation_dim = static_cast<int>(rho.dim());
    rep.converged = true;
    return rep;
  }
  return fisher_discord_converged(state, ham, req.cfg);
}

// -- sweeps ---------------------------------------------------------------------

struct SweepSpec {
  std::optional<Family> family;
  ParamBag fixed;
  std::vector<double> weights;
  std::optional<KeyValueSpec> state;
  std::optional<KeyValueSpec> ham;
  std::string param;
  double start = 0;
  double stop = 0;
  int count = 0;
  FockConfig cfg;
  int threads = 0;
  std::string label;
};

namespace detail {

template <typename Fn>
void parallel_for(int n, int threads, Fn&& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (int i; (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline std::string describe_bag(const ParamBag& bag) {
  std::string out;
  for (const auto& [k, v] : bag) out += k + "=" + CsvTable::format_value(v) + " ";
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace detail

/// One grid sweep. Family mode fills columns (param, c_closed, c_spectral,
/// i_f, i_w, used_dim); (state, Hamiltonian) mode omits c_closed.
inline CsvTable run_sweep(const SweepSpec& spec) {
  if (spec.count < 2) throw ParamOutOfDomain("sweep: count must be >= 2");
  if (!(spec.start < spec.stop)) throw ParamOutOfDomain("sweep: need start < stop");
  if (spec.param.empty()) throw ParamOutOfDomain("sweep: no swept parameter");
  spec.cfg.validate();

  const bool family_mode = spec.family.has_value();
  if (family_mode) {
    auto keys = family_param_keys(*spec.family);
    if (!keys.count(spec.param))
      throw ParamOutOfDomain("parameter '" + spec.param + "' does not belong to family " +
                             std::string(family_name(*spec.family)));
    for (const auto& [k, v] : spec.fixed) {
      (void)v;
      if (!keys.count(k))
        throw ParamOutOfDomain("fixed parameter '" + k + "' does not belong to family " +
                               std::string(family_name(*spec.family)));
    }
    if (family_takes_weights(*spec.family) && spec.weights.empty())
      throw ParamOutOfDomain(std::string(family_name(*spec.family)) + " needs a weights vector");
  } else {
    if (!spec.state || !spec.ham)
      throw ParamOutOfDomain("sweep: need either a family or a state/Hamiltonian pair");
    bool in_state = spec.state->find(spec.param).has_value();
    bool in_ham = spec.ham->find(spec.param).has_value();
    if (!in_state && !in_ham)
      throw ParamOutOfDomain("swept parameter '" + spec.param +
                             "' does not appear in the state or Hamiltonian spec");
  }

  std::vector<double> grid(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i)
    grid[static_cast<std::size_t>(i)] =
        spec.start + (spec.stop - spec.start) * i / (spec.count - 1);

  CsvTable table;
  table.comments.push_back(std::string(kVersion));
  if (family_mode)
    table.comments.push_back("family " + std::string(family_name(*spec.family)));
  else
    table.comments.push_back("state " + spec.state->to_string() + " ham " +
                             spec.ham->to_string());
  table.comments.push_back("sweep " + spec.param + " from " +
                           CsvTable::format_value(spec.start) + " to " +
                           CsvTable::format_value(spec.stop) + " count " +
                           std::to_string(spec.count));
  if (!spec.fixed.empty())
    table.comments.push_back("fixed " + detail::describe_bag(spec.fixed));
  if (!spec.weights.empty()) {
    std::string w = "weights ";
    for (double x : spec.weights) w += CsvTable::format_value(x) + ";";
    w.pop_back();
    table.comments.push_back(w);
  }
  table.comments.push_back("fock dim " + std::to_string(spec.cfg.dim) + " max_dim " +
                           std::to_string(spec.cfg.max_dim) + " conv_tol " +
                           CsvTable::format_value(spec.cfg.conv_tol));
  if (family_mode)
    table.columns = {spec.param, "c_closed", "c_spectral", "i_f", "i_w", "used_dim"};
  else
    table.columns = {spec.param, "c_spectral", "i_f", "i_w", "used_dim"};

  table.rows.assign(grid.size(), {});
  detail::parallel_for(spec.count, spec.threads, [&](int i) {
    double x = grid[static_cast<std::size_t>(i)];
    std::vector<double> row;
    if (family_mode) {
      ParamBag bag = spec.fixed;
      bag[spec.param] = x;
      FormulaParams prm = resolve_params(bag, spec.weights);
      double closed = evaluate_closed_form(*spec.family, prm);
      SpectralPair pair = spectral_pair(*spec.family, prm);
      DiscordReport rep = fisher_discord_converged(pair.state, pair.ham, spec.cfg);
      row = {x, closed, rep.c, rep.i_f, rep.i_w,
             static_cast<double>(rep.truncation_dim.value_or(0))};
    } else {
      KeyValueSpec state = *spec.state;
      KeyValueSpec ham = *spec.ham;
      const std::string value = CsvTable::format_value(x);
      if (state.find(spec.param)) state.set(spec.param, value);
      if (ham.find(spec.param)) ham.set(spec.param, value);
      DiscordReport rep = run_compute({state, ham, spec.cfg});
      row = {x, rep.c, rep.i_f, rep.i_w, static_cast<double>(rep.truncation_dim.value_or(0))};
    }
    table.rows[static_cast<std::size_t>(i)] = std::move(row);
  });
  return table;
}

// -- extremum search over a family ---------------------------------------------

inline ExtremumResult run_extremum(Family family, const std::string& param, double lo, double hi,
                                   bool maximize, const ParamBag& fixed = {},
                                   const std::vector<double>& weights = {},
                                   double bracket_tol = 1e-7) {
  auto keys = family_param_keys(family);
  if (!keys.count(param))
    throw ParamOutOfDomain("parameter '" + param + "' does not belong to family " +
                           std::string(family_name(family)));
  auto f = [&](double x) {
    ParamBag bag = fixed;
    bag[param] = x;
    return evaluate_closed_form(family, resolve_params(bag, weights));
  };
  return maximize ? golden_section_max(f, lo, hi, bracket_tol)
                  : golden_section_min(f, lo, hi, bracket_tol);
}

// -- figure presets --------------------------------------------------------------

struct FigureSweep {
  std::string filename;
  SweepSpec spec;
};

/// The eight figure presets: curve parameters are the ones quoted in the
/// figure captions, grids are chosen to resolve every reported feature.
inline std::vector<FigureSweep> figure_presets(const FockConfig& cfg, int threads = 0) {
  using std::numbers::pi;
  std::vector<FigureSweep> out;
  const double l0 = lambda0();

  auto add = [&](std::string filename, Family family, std::string param, double start,
                 double stop, int count, ParamBag fixed) {
    SweepSpec s;
    s.family = family;
    s.param = std::move(param);
    s.start = start;
    s.stop = stop;
    s.count = count;
    s.fixed = std::move(fixed);
    s.cfg = cfg;
    s.threads = threads;
    out.push_back({std::move(filename), std::move(s)});
  };

  // fig1: C(rho_g, a^dag a) vs |zeta| at |z| = 1, 2 arg z - arg zeta = 0.
  const std::vector<std::pair<std::string, double>> fig1_lambdas = {
      {"0.01", 0.01}, {"lambda0", l0}, {"0.3", 0.3}, {"0.8", 0.8}};
  for (const auto& [tag, lam] : fig1_lambdas)
    add("fig1_lambda_" + tag + ".csv", Family::GaussianN, "abs_zeta", 0.0, 1.0, 101,
        {{"lambda", lam}, {"abs_z", 1.0}, {"arg_z", 0.0}, {"arg_zeta", 0.0}});

  // fig2: same quantity vs lambda for |zeta| in {0.01, 0.1, 0.3, 0.5}.
  for (double zeta : {0.01, 0.1, 0.3, 0.5})
    add("fig2_zeta_" + CsvTable::format_value(zeta) + ".csv", Family::GaussianN, "lambda", 0.01,
        0.90, 90, {{"abs_zeta", zeta}, {"abs_z", 1.0}, {"arg_z", 0.0}, {"arg_zeta", 0.0}});

  // fig3: C(rho_{p,0,1}, a^dag a) vs p.
  add("fig3.csv", Family::MixtureN, "p", 0.0, 1.0, 201, {{"m", 0.0}, {"n", 1.0}});

  // fig4: C(rho_p, X_theta) = g_p vs p.
  add("fig4.csv", Family::TwoLevelX, "p", 0.0, 1.0, 201, {});

  // fig5: the three thermal-family quadrature curves vs lambda.
  add("fig5_thermal.csv", Family::ThermalX, "lambda", 0.01, 0.95, 95, {});
  add("fig5_trunc_thermal.csv", Family::TruncThermalX, "lambda", 0.01, 0.95, 95, {});
  add("fig5_pa_thermal.csv", Family::PaThermalX, "lambda", 0.01, 0.95, 95, {});

  // fig6: C(rho_g, X_theta) vs |zeta| at lambda0 for theta'_zeta curves.
  const std::vector<std::pair<std::string, double>> fig6_angles = {
      {"0", 0.0}, {"pi_4", pi / 4}, {"pi_2", pi / 2}, {"pi", pi}};
  for (const auto& [tag, angle] : fig6_angles)
    add("fig6_tpz_" + tag + ".csv", Family::GaussianX, "abs_zeta", 0.0, 1.5, 121,
        {{"lambda", l0}, {"thetap_zeta", angle}, {"abs_z", 0.0}});

  // fig7: C(rho_{p,0,1}, X_theta) vs p for theta in {0, pi/4, pi/2}.
  const std::vector<std::pair<std::string, double>> fig7_angles = {
      {"0", 0.0}, {"pi_4", pi / 4}, {"pi_2", pi / 2}};
  for (const auto& [tag, angle] : fig7_angles)
    add("fig7_theta_" + tag + ".csv", Family::MixtureX, "p", 0.005, 0.995, 199,
        {{"m", 0.0}, {"n", 1.0}, {"theta", angle}});

  // fig8: C(rho_g, Lambda_theta) vs theta_zeta at |z| = |zeta| = 1, lambda0.
  const std::vector<std::pair<std::string, double>> fig8_angles = {
      {"0", 0.0}, {"pi_4", pi / 4}, {"pi_2", pi / 2}, {"pi", pi}};
  for (const auto& [tag, angle] : fig8_angles)
    add("fig8_tz_" + tag + ".csv", Family::GaussianL, "theta_zeta", 0.0, 2 * pi, 161,
        {{"lambda", l0}, {"abs_z", 1.0}, {"abs_zeta", 1.0}, {"theta_z", angle}});

  return out;
}

/// Run every preset into a directory; returns the file paths written.
inline std::vector<std::filesystem::path> run_figures(const std::filesystem::path& dir,
                                                      const FockConfig& cfg, int threads = 0) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (const auto& fig : figure_presets(cfg, threads)) {
    CsvTable table = run_sweep(fig.spec);
    std::filesystem::path path = dir / fig.filename;
    table.write_file(path);
    written.push_back(path);
  }
  return written;
}

}  // namespace qfd
