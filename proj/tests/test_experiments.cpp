#include "llab/experiments.hpp"

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "llab/literals.hpp"
#include "llab/report.hpp"

using namespace llab;

TEST_CASE("literal parsing") {
  CHECK(parse_complex("1.5") == cplx{1.5, 0.0});
  CHECK(parse_complex("1+2i") == cplx{1.0, 2.0});
  CHECK(parse_complex("-0.5i") == cplx{0.0, -0.5});
  CHECK(parse_complex("i") == cplx{0.0, 1.0});
  CHECK(parse_complex("-1.5-0.5i") == cplx{-1.5, -0.5});
  CHECK(parse_complex("2e-3") == cplx{0.002, 0.0});
  CHECK_THROWS_AS(parse_complex("bogus"), std::invalid_argument);

  CHECK(parse_real("pi") == doctest::Approx(kPi));
  CHECK(parse_real("-0.5pi") == doctest::Approx(-kPi / 2));
  CHECK(parse_real("2.5") == 2.5);

  const Symbol tp = parse_symbol("trigpoly: 1 0.5i 1");
  CHECK(tp.degree() == 1);
  CHECK(tp.coeff(-1) == cplx{1, 0});
  CHECK(tp.coeff(0) == cplx{0, 0.5});

  const Symbol hat = parse_symbol("hat(1, pi)");
  CHECK(hat.eval(0.0).real() == doctest::Approx(1.0));

  const Symbol st = parse_symbol("step(0, pi, 1)");
  CHECK(st.eval(1.0) == cplx{1.0, 0.0});

  CHECK(parse_symbol("exp(1)").degree() == 1);
  CHECK_THROWS_AS(parse_symbol("trigpoly: 1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbol("wavelet(3)"), std::invalid_argument);

  const SpaceSpec l2 = parse_space("l2");
  CHECK(l2.kind() == SpaceKind::LebesgueP);
  const SpaceSpec wsp = parse_space("lp(3)*power(0.2)");
  CHECK(wsp.p() == 3.0);
  CHECK_FALSE(wsp.unweighted());
  CHECK(parse_space("lorentz(3, 1.5)").q() == 1.5);
  CHECK(parse_space("orlicz-piecewise(2,4)").kind() == SpaceKind::Orlicz);
  CHECK_THROWS_AS(parse_space("zygmund(1)"), std::invalid_argument);

  CHECK(parse_weight("none").is_identity());
  CHECK(parse_weight("const(2)").value(9) == 2.0);
  CHECK(parse_weight("power(0.5)").value(-3) == doctest::Approx(2.0));
  CHECK(parse_weight("pow(power(0.5), 2)").value(3) ==
        doctest::Approx(4.0).epsilon(1e-14));
  CHECK(parse_weight("halfpower(0.5)").domain() == WeightDomain::HalfLine);
}

TEST_CASE("config files parse with strict keys") {
  const char* path = "test_config.tmp";
  {
    std::ofstream os(path);
    os << "# comment\n";
    os << "symbol = hat(1, pi)\n";
    os << "n_schedule = 4, 8, 16\n";
    os << "seed = 99\n";
    os << "format = json\n";
  }
  const ExperimentConfig cfg = ExperimentConfig::from_file(path);
  CHECK(cfg.symbol == "hat(1, pi)");
  CHECK(cfg.n_schedule == std::vector<long long>{4, 8, 16});
  CHECK(cfg.seed == 99);
  CHECK(cfg.format == "json");

  ExperimentConfig bad;
  CHECK_THROWS_AS(bad.apply_key("no_such_key", "1"), std::invalid_argument);
  std::remove(path);
}

TEST_CASE("csv writer quotes per RFC 4180 and jsonl mirrors rows") {
  ReportTable t;
  ReportRow r;
  r.add("name", std::string("a,b \"q\""));
  r.add("value", 1.5, MethodTag::Lower);
  t.rows.push_back(r);
  std::ostringstream csv;
  write_csv(t, csv);
  CHECK(csv.str() ==
        "name,value,value_method\n\"a,b \"\"q\"\"\",1.5,lower\n");

  std::ostringstream jl;
  write_jsonl(t, jl);
  CHECK(jl.str().find("\"value_method\":\"lower\"") != std::string::npos);
}

TEST_CASE("fejer convergence table") {
  ExperimentConfig cfg;
  cfg.symbol = "trigpoly: 0 1 0 1 0.5";
  cfg.space = "lp(3)";
  cfg.weight = "power(0.2)";
  cfg.n_schedule = {4, 8, 16, 32, 64};
  cfg.section_n = 48;
  cfg.iterations = 30;
  cfg.restarts = 2;
  const ReportTable t = run_fejer_convergence(cfg);
  REQUIRE(t.rows.size() == 5);

  auto col = [&](const ReportRow& row, const std::string& key) {
    for (const Cell& c : row.cells) {
      if (c.key == key) return std::get<double>(c.value);
    }
    FAIL("missing column");
    return 0.0;
  };
  // deficit columns decay; for a trig polynomial the coefficient deficit
  // decays exactly like 1/(n+1)
  double prev = 1e300;
  for (const ReportRow& row : t.rows) {
    const double sup = col(row, "sup_deficit");
    CHECK(sup < prev);
    prev = sup;
    CHECK(col(row, "mult_lower") >= 0.0);
  }
  const double l1_first = col(t.rows.front(), "deficit_coeff_l1");
  const double l1_last = col(t.rows.back(), "deficit_coeff_l1");
  CHECK(l1_first / l1_last == doctest::Approx(65.0 / 5.0).epsilon(1e-9));

  // discontinuous symbols are rejected with the continuity message
  ExperimentConfig bad = cfg;
  bad.symbol = "step(0, pi, 1)";
  CHECK_THROWS_WITH_AS(run_fejer_convergence(bad),
                       doctest::Contains("continuous"), std::invalid_argument);
}

TEST_CASE("weight sweep flips the verdict across gamma = 1/2") {
  ExperimentConfig cfg;
  cfg.gamma_grid = {0.4, 0.6};
  cfg.p_grid = {2.0};
  cfg.budget = 4096;
  cfg.eps_grid = {-0.05, 0.0, 0.05};
  cfg.stability_p_grid = {1.9, 2.0, 2.1};
  const ReportTable t = run_weight_sweep(cfg);
  REQUIRE(t.rows.size() == 3);  // const row + two gammas

  auto get = [&](const ReportRow& row, const std::string& key) {
    for (const Cell& c : row.cells) {
      if (c.key == key) return c;
    }
    FAIL("missing column");
    return Cell{};
  };
  CHECK(std::get<double>(get(t.rows[0], "ap_characteristic").value) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::get<std::string>(get(t.rows[1], "verdict").value) == "in-ap");
  CHECK(std::get<std::string>(get(t.rows[2], "verdict").value) == "not-in-ap");
  CHECK(std::get<bool>(get(t.rows[1], "stability_box").value));
}

TEST_CASE("calibration record") {
  ExperimentConfig cfg;
  cfg.calib_spaces = "l2;l2*power(0.3)";
  cfg.calib_n = 48;
  cfg.iterations = 30;
  cfg.restarts = 2;
  const CalibrationRecord rec = calibrate_constants(cfg);
  REQUIRE(rec.entries.size() == 2);
  // constants force c >= 1: the constant-1 fixture has sup + V = 1 and
  // multiplier norm exactly 1
  CHECK(rec.entries[0].constant >= 1.0 - 1e-9);
  // the shift on the power-weighted space contributes at least
  // sup w_{k+1}/w_k / (1 + 2 pi)
  CHECK(rec.entries[1].constant >=
        std::pow(2.0, 0.3) / (1.0 + kTwoPi) - 1e-9);

  std::ostringstream os;
  write_calibration_json(rec, os);
  CHECK(os.str().find("stechkin-calibration") != std::string::npos);

  // adding fixtures never decreases the constant: rerun with a larger family
  // is covered by construction (max over a superset); here we check the
  // record is stable across reruns
  const CalibrationRecord rec2 = calibrate_constants(cfg);
  CHECK(rec2.entries[0].constant == rec.entries[0].constant);
}

TEST_CASE("deficit trig polynomial matches the coefficient formula") {
  const Symbol a = parse_symbol("trigpoly: 0.5 1 2 1 0.5");
  const long long n = 3;
  const Symbol d = make_deficit_trigpoly(a, n, 64);
  for (long long k = -2; k <= 2; ++k) {
    const double factor = static_cast<double>(std::llabs(k)) / (n + 1.0);
    const cplx expect = -factor * a.coeff(k);
    CHECK(std::abs(d.coeff(k) - expect) < 1e-15);
  }
}

TEST_CASE("verification suite passes on defaults") {
  ExperimentConfig cfg;
  cfg.budget = 4096;
  const VerificationSummary summary = run_verification_suite(cfg);
  for (const auto& check : summary.checks) {
    INFO(check.name, ": ", check.detail);
    CHECK(check.passed);
  }
  CHECK(summary.all_ok());
  // the designed counterexample is present and marked expected-fail
  bool saw_expected_fail = false;
  for (const auto& check : summary.checks) {
    if (check.expected_fail) saw_expected_fail = true;
  }
  CHECK(saw_expected_fail);
}
