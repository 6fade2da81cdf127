// laurent-lab: experiment runner for Laurent operators on weighted
// rearrangement-invariant sequence spaces.
//
// Subcommands: fejer, weights, boyd, verify, calibrate.
// Exit codes: 0 all checks pass, 1 a verification check failed,
// 2 configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "llab/experiments.hpp"
#include "llab/report.hpp"

namespace {

struct CliOverrides {
  std::string config_path;
  std::string out;
  std::string format;
  std::string symbol;
  std::string space;
  std::string weight;
  long long seed = -1;
  int threads = -1;
  double tolerance = -1.0;
};

llab::ExperimentConfig assemble_config(const CliOverrides& cli) {
  llab::ExperimentConfig cfg;
  if (!cli.config_path.empty()) {
    cfg = llab::ExperimentConfig::from_file(cli.config_path);
  }
  if (const char* env = std::getenv("LAURENT_LAB_THREADS")) {
    cfg.threads = std::max(1, std::atoi(env));
  }
  if (cli.threads > 0) cfg.threads = cli.threads;
  if (cli.seed >= 0) cfg.seed = static_cast<std::uint64_t>(cli.seed);
  if (cli.tolerance > 0.0) cfg.tolerance = cli.tolerance;
  if (!cli.out.empty()) cfg.out = cli.out;
  if (!cli.format.empty()) cfg.format = cli.format;
  if (!cli.symbol.empty()) cfg.symbol = cli.symbol;
  if (!cli.space.empty()) cfg.space = cli.space;
  if (!cli.weight.empty()) cfg.weight = cli.weight;
  if (cfg.format != "csv" && cfg.format != "json") {
    throw std::invalid_argument("format must be csv or json");
  }
  return cfg;
}

int emit_table(const llab::ReportTable& table,
               const llab::ExperimentConfig& cfg) {
  if (cfg.out.empty()) {
    llab::write_table(table, std::cout, cfg.format);
  } else {
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output '" + cfg.out + "'");
    llab::write_table(table, os, cfg.format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "laurent-lab: multiplier-norm, Muckenhoupt-weight and Boyd-index "
      "experiments on weighted sequence spaces"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  CliOverrides cli;
  app.add_option("--config", cli.config_path, "key = value configuration file");
  app.add_option("--out", cli.out, "output path (default stdout)");
  app.add_option("--format", cli.format, "csv or json");
  app.add_option("--seed", cli.seed, "RNG seed (u64)");
  app.add_option("--threads", cli.threads,
                 "worker threads (fallback: LAURENT_LAB_THREADS)");
  app.add_option("--tolerance", cli.tolerance, "generic tolerance override");
  app.add_option("--symbol", cli.symbol, "symbol literal");
  app.add_option("--space", cli.space, "space literal, e.g. lp(3)*power(0.2)");
  app.add_option("--weight", cli.weight, "weight literal folded into the space");

  auto* fejer = app.add_subcommand(
      "fejer", "Fejer-mean convergence table for a continuous BV symbol");
  auto* weights = app.add_subcommand(
      "weights", "Muckenhoupt characteristic / reverse-Holder / stability sweep");
  auto* boyd = app.add_subcommand("boyd", "Boyd index table for built-in spaces");
  auto* verify =
      app.add_subcommand("verify", "run the full verification suite");
  auto* calibrate = app.add_subcommand(
      "calibrate", "calibrate Stechkin constants over the BV fixture family");

  CLI11_PARSE(app, argc, argv);

  try {
    const llab::ExperimentConfig cfg = assemble_config(cli);
    if (fejer->parsed()) {
      return emit_table(llab::run_fejer_convergence(cfg), cfg);
    }
    if (weights->parsed()) {
      return emit_table(llab::run_weight_sweep(cfg), cfg);
    }
    if (boyd->parsed()) {
      return emit_table(llab::run_boyd_table(cfg), cfg);
    }
    if (calibrate->parsed()) {
      const llab::CalibrationRecord record = llab::calibrate_constants(cfg);
      if (cfg.out.empty()) {
        llab::write_calibration_json(record, std::cout);
      } else {
        std::ofstream os(cfg.out, std::ios::binary);
        if (!os) {
          throw std::invalid_argument("cannot open output '" + cfg.out + "'");
        }
        llab::write_calibration_json(record, os);
      }
      return 0;
    }
    if (verify->parsed()) {
      const llab::VerificationSummary summary =
          llab::run_verification_suite(cfg);
      for (const auto& check : summary.checks) {
        std::cout << (check.passed ? "[pass] " : "[FAIL] ") << check.name;
        if (check.expected_fail) std::cout << " [expected-fail]";
        if (!check.detail.empty()) std::cout << " - " << check.detail;
        std::cout << "\n";
      }
      if (!cfg.out.empty()) {
        std::ofstream os(cfg.out, std::ios::binary);
        if (!os) {
          throw std::invalid_argument("cannot open output '" + cfg.out + "'");
        }
        llab::write_table(summary.to_table(), os, cfg.format);
      }
      std::cout << (summary.all_ok() ? "all checks passed"
                                     : "some checks FAILED")
                << "\n";
      return summary.all_ok() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
