#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "qfd/sweep.hpp"

using namespace qfd;
using std::numbers::pi;

TEST_CASE("golden section search") {
  auto bump = [](double x) { return -(x - 1.3) * (x - 1.3); };
  ExtremumResult max = golden_section_max(bump, 0.0, 3.0);
  REQUIRE(max.arg == Catch::Approx(1.3).margin(1e-6));
  REQUIRE(max.value == Catch::Approx(0.0).margin(1e-12));

  ExtremumResult min = golden_section_min([](double x) { return (x - 0.8) * (x - 0.8); }, 0.0, 2.0);
  REQUIRE(min.arg == Catch::Approx(0.8).margin(1e-6));

  REQUIRE_THROWS_AS(golden_section_max(bump, 2.0, 1.0), ParamOutOfDomain);
}

TEST_CASE("extremum over a family") {
  ExtremumResult r = run_extremum(Family::ThermalX, "lambda", 0.01, 0.5, true);
  REQUIRE(r.arg == Catch::Approx(lambda0()).margin(1e-6));
  REQUIRE(r.value == Catch::Approx(0.3003).margin(5e-4));

  REQUIRE_THROWS_AS(run_extremum(Family::ThermalX, "p", 0.0, 1.0, true), ParamOutOfDomain);
}

TEST_CASE("csv bytes") {
  CsvTable t;
  t.comments = {"qfd test", "alpha=1"};
  t.columns = {"x", "y"};
  t.rows = {{0.5, 1.0 / 3.0}, {2.0, 42.0}};
  REQUIRE(t.to_string() ==
          "# qfd test\n# alpha=1\nx,y\n0.5,0.33333333333333331\n2,42\n");
}

TEST_CASE("spec string parsing") {
  KeyValueSpec thermal = parse_spec_string("thermal:lambda=0.3");
  REQUIRE(thermal.kind == "thermal");
  REQUIRE(thermal.get("lambda") == "0.3");

  KeyValueSpec bloch = parse_spec_string("bloch:0,0,1");
  REQUIRE(bloch.positional.size() == 3);

  KeyValueSpec number = parse_spec_string("number");
  REQUIRE(number.kind == "number");
  REQUIRE(number.kv.empty());

  KeyValueSpec gauss = parse_spec_string("gaussian:lambda=0.2,zeta=0.5@1.5,z=1@0.785398");
  REQUIRE(std::abs(parse_complex(gauss.get("z")) - std::polar(1.0, 0.785398)) < 1e-12);

  REQUIRE_THROWS_AS(parse_spec_string(":oops"), ParseError);
  REQUIRE_THROWS_AS(parse_spec_string("thermal:"), ParseError);
  REQUIRE_THROWS_AS(parse_double("1.2junk"), ParseError);
  REQUIRE_THROWS_AS(parse_complex("abc@1"), ParseError);

  std::vector<double> w = parse_weights("0.5;0.3;0.2");
  REQUIRE(w.size() == 3);
  REQUIRE(w[1] == 0.3);
  REQUIRE_THROWS_AS(parse_weights("0.5;;0.5"), ParseError);
}

TEST_CASE("builders reject unknown kinds") {
  REQUIRE_THROWS_AS(make_state_builder(parse_spec_string("nonsense:foo=1")), ParseError);
  REQUIRE_THROWS_AS(make_operator_builder(parse_spec_string("nonsense")), ParseError);
  REQUIRE_THROWS_AS(make_operator_builder(parse_spec_string("pauli:w")), ParseError);
}

TEST_CASE("run_compute end to end") {
  FockConfig cfg;

  DiscordReport thermal = run_compute(
      {parse_spec_string("thermal:lambda=0.3"), parse_spec_string("number"), cfg});
  REQUIRE(thermal.c <= 1e-12);
  REQUIRE(thermal.converged.value());

  DiscordReport mixture = run_compute(
      {parse_spec_string("mixture:p=0.5,m=0,n=1"), parse_spec_string("number"), cfg});
  REQUIRE(mixture.c == Catch::Approx(0.0258883).margin(5e-7));

  DiscordReport pure = run_compute(
      {parse_spec_string("bloch:0,0,1"), parse_spec_string("pauli:x"), cfg});
  REQUIRE(pure.c <= 1e-12);
  REQUIRE(pure.truncation_dim.value() == 2);

  REQUIRE_THROWS_AS(
      run_compute({parse_spec_string("bloch:0,0,1"), parse_spec_string("number"), cfg}),
      DimensionMismatch);
}

TEST_CASE("family sweep produces matching columns") {
  SweepSpec spec;
  spec.family = Family::TwoLevelX;
  spec.param = "p";
  spec.start = 0.0;
  spec.stop = 1.0;
  spec.count = 21;
  spec.cfg = FockConfig{};
  CsvTable table = run_sweep(spec);

  REQUIRE(table.columns ==
          std::vector<std::string>{"p", "c_closed", "c_spectral", "i_f", "i_w", "used_dim"});
  REQUIRE(table.rows.size() == 21);
  for (const auto& row : table.rows) {
    REQUIRE(std::abs(row[1] - row[2]) <= 1e-6 * std::max(1.0, std::abs(row[1])));
    REQUIRE(row[1] >= -1e-12);
  }
  // zeros of g_p at p = 0, 1/2, 1
  REQUIRE(table.rows.front()[1] == 0.0);
  REQUIRE(table.rows[10][1] <= 1e-12);
  REQUIRE(table.rows.back()[1] == 0.0);

  std::string once = table.to_string();
  std::string twice = run_sweep(spec).to_string();
  REQUIRE(once == twice);
}

TEST_CASE("pair-mode sweep omits the closed column") {
  SweepSpec spec;
  spec.state = parse_spec_string("thermal:lambda=0.1");
  spec.ham = parse_spec_string("number");
  spec.param = "lambda";
  spec.start = 0.1;
  spec.stop = 0.5;
  spec.count = 5;
  spec.cfg = FockConfig{};
  CsvTable table = run_sweep(spec);
  REQUIRE(table.columns ==
          std::vector<std::string>{"lambda", "c_spectral", "i_f", "i_w", "used_dim"});
  for (const auto& row : table.rows) REQUIRE(row[1] <= 1e-12);
}

TEST_CASE("sweep validation") {
  SweepSpec spec;
  spec.family = Family::ThermalX;
  spec.param = "lambda";
  spec.start = 0.1;
  spec.stop = 0.5;
  spec.count = 1;
  REQUIRE_THROWS_AS(run_sweep(spec), ParamOutOfDomain);

  spec.count = 5;
  spec.start = 0.7;
  REQUIRE_THROWS_AS(run_sweep(spec), ParamOutOfDomain);

  spec.start = 0.1;
  spec.param = "p";
  REQUIRE_THROWS_AS(run_sweep(spec), ParamOutOfDomain);

  spec.param = "lambda";
  spec.fixed["p"] = 0.3;
  REQUIRE_THROWS_AS(run_sweep(spec), ParamOutOfDomain);

  SweepSpec diag;
  diag.family = Family::FockDiagX;
  diag.param = "theta";
  diag.start = 0;
  diag.stop = 1;
  diag.count = 3;
  REQUIRE_THROWS_AS(run_sweep(diag), ParamOutOfDomain);  // needs weights
}

TEST_CASE("derived angle parameters resolve to concrete ones") {
  ParamBag bag{{"thetap_zeta", pi / 2}, {"abs_zeta", 0.7}};
  FormulaParams prm = resolve_params(bag);
  REQUIRE(2 * prm.theta - std::arg(prm.zeta) == Catch::Approx(pi / 2));

  ParamBag bag8{{"theta_z", pi / 4}, {"theta_zeta", 1.0}, {"abs_z", 1.0}, {"abs_zeta", 1.0}};
  FormulaParams prm8 = resolve_params(bag8);
  REQUIRE(prm8.theta - 2 * std::arg(prm8.z) == Catch::Approx(pi / 4));
  REQUIRE(prm8.theta - std::arg(prm8.zeta) == Catch::Approx(1.0));

  REQUIRE_THROWS_AS(resolve_params(ParamBag{{"bogus", 1.0}}), ParamOutOfDomain);
}

TEST_CASE("figure presets are well-formed") {
  auto presets = figure_presets(FockConfig{});
  REQUIRE(presets.size() == 24);
  std::set<std::string> names;
  for (const auto& fig : presets) {
    REQUIRE(names.insert(fig.filename).second);
    REQUIRE(fig.spec.family.has_value());
    REQUIRE(fig.spec.count >= 2);
    REQUIRE(fig.spec.start < fig.spec.stop);
    REQUIRE(family_param_keys(*fig.spec.family).count(fig.spec.param) == 1);
  }
  // all eight figures represented
  for (int i = 1; i <= 8; ++i) {
    std::string prefix = "fig" + std::to_string(i);
    bool found = false;
    for (const auto& fig : presets) found = found || fig.filename.starts_with(prefix);
    REQUIRE(found);
  }
}

TEST_CASE("a reduced figure preset runs and cross-validates") {
  auto presets = figure_presets(FockConfig{});
  SweepSpec spec = presets[8].spec;  // fig3: mixture vs p
  REQUIRE(presets[8].filename == "fig3.csv");
  spec.count = 7;
  CsvTable table = run_sweep(spec);
  for (const auto& row : table.rows)
    REQUIRE(std::abs(row[1] - row[2]) <= 1e-6 * std::max(1.0, std::abs(row[1])));
}
