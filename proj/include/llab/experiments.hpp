#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llab/report.hpp"
#include "llab/spaces.hpp"
#include "llab/symbols.hpp"

namespace llab {

// Flat configuration shared by all experiment runners. Loaded from a plain
// key = value file, then overridden by CLI flags. Unknown keys are rejected.
struct ExperimentConfig {
  std::string symbol = "hat(1,pi)";
  std::string space = "lp(3)*power(0.2)";
  std::string weight;  // folded into `space` when set
  std::vector<long long> n_schedule = {4, 8, 16, 32, 64, 128, 256};
  std::vector<long long> big_n_schedule = {64, 128, 256, 512};
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  int threads = 1;
  std::string out;            // empty = stdout
  std::string format = "csv";

  // weight machinery
  long long budget = 4096;  // 2^12
  long long anchor_range = 512;
  std::vector<double> gamma_grid = {0.1, 0.2, 0.3, 0.4, 0.5,
                                    0.6, 0.7, 0.8, 0.9};
  std::vector<double> p_grid = {2.0};
  std::vector<double> stability_p_grid = {1.9, 2.0, 2.1};
  std::vector<double> eps_grid = {-0.3, -0.1, -0.05, 0.0, 0.05, 0.1, 0.3};
  std::vector<double> delta_grid = {0.0, 0.125, 0.25, 0.5, 1.0};
  double p0 = 2.0;
  double rh_constant_cap = 10.0;

  // boyd
  int j_max = 1024;
  long long boyd_budget = 16384;  // 2^14
  std::string specs =
      "lp(1.5);lp(2);lp(3);lorentz(3,1.5);orlicz-piecewise(2,4)";

  // multiplier estimation
  long long section_n = 256;  // section half-width for the fejer lower column
  int restarts = 8;
  int iterations = 60;
  double stechkin_constant = 1.0;
  double interp_delta = 0.1;  // |delta_i| in the interpolation exponents

  // calibration
  std::string calib_spaces = "l2;l2*power(0.3);lp(3)*power(0.2)";
  long long calib_n = 256;

  static ExperimentConfig from_file(const std::string& path);
  void apply_key(const std::string& key, const std::string& value);

  // Enforces the structural invariants ahead of any run: schedules strictly
  // increasing, tolerances positive, grids nonempty. Throws
  // std::invalid_argument otherwise.
  void validate() const;
};

ReportTable run_fejer_convergence(const ExperimentConfig& config);
ReportTable run_weight_sweep(const ExperimentConfig& config);
ReportTable run_boyd_table(const ExperimentConfig& config);

struct VerificationSummary {
  struct Check {
    std::string name;
    bool passed = false;       // final outcome (expected failures count as pass)
    bool expected_fail = false;
    std::string detail;
  };
  std::vector<Check> checks;
  bool all_ok() const;
  ReportTable to_table() const;
};

// Executes the library's invariant battery as named checks; individual
// failures are collected, not fatal.
VerificationSummary run_verification_suite(const ExperimentConfig& config);

struct CalibrationRecord {
  struct Entry {
    std::string space;
    double constant = 1.0;         // max observed lower / (sup + V)
    std::string attained_fixture;
    long long section_halfwidth = 0;
  };
  std::vector<Entry> entries;
};

// Smallest c per space with c * (sup + V) >= every observed lower bound over
// the bounded-variation fixture family; feeds the Stechkin upper route.
CalibrationRecord calibrate_constants(const ExperimentConfig& config);
void write_calibration_json(const CalibrationRecord& record, std::ostream& os);

// The deficit sigma_n(a) - a as a trig polynomial truncated at `radius`
// coefficients (exact when a is a trig polynomial and radius covers it).
Symbol make_deficit_trigpoly(const Symbol& a, long long n, long long radius);

}  // namespace llab
