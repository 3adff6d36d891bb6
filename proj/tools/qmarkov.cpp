// SPDX-License-Identifier: Apache-2.0
//
// qmarkov: compiles binary-state Markov chains to quantum circuits, runs
// them on the dense statevector simulator, and cross-checks the measured
// path distribution against exhaustive classical enumeration.
//
// Subcommands: simulate, compare, calibrate, export-qasm, closed-form.
// Exit statuses: 0 success, 1 usage/parse error, 2 validation error,
// 3 comparison failure.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmarkov/chain.hpp"
#include "qmarkov/config.hpp"
#include "qmarkov/qasm.hpp"
#include "qmarkov/statevector.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitComparison = 3;

struct GlobalOptions {
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  double tolerance = 1e-9;
};

std::string fixed12(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", value);
  return buf;
}

std::string scientific3(double value) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

std::string bit_string(std::uint64_t index, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t pos = 0; pos < length; ++pos) {
    if (index & (std::uint64_t{1} << (length - 1 - pos))) s[pos] = '1';
  }
  return s;
}

// Command-line flags win over config fields.
qmarkov::ChainConfig merge_options(qmarkov::ChainConfig config,
                                   const GlobalOptions& options) {
  if (options.shots) config.shots = options.shots;
  if (options.seed) config.seed = options.seed;
  return config;
}

void warn_if_degenerate(const qmarkov::ChainConfig& config) {
  if (!config.initial_basis) return;
  const auto no_init =
      qmarkov::compile_chain_no_init(config.spec, *config.initial_basis);
  if (no_init.degenerate) {
    std::cerr << "qmarkov: warning: initial basis "
              << bit_string(*config.initial_basis, config.spec.length)
              << " never fires a controlled gate; the circuit is the identity\n";
  }
}

int cmd_simulate(const std::string& path, const GlobalOptions& options) {
  const auto config =
      merge_options(qmarkov::load_chain_config(path), options);
  warn_if_degenerate(config);
  const qmarkov::StateVector state = qmarkov::simulate_config(config);
  const std::vector<double> probs = state.probabilities();

  std::vector<std::uint64_t> counts;
  if (config.shots) {
    std::uint64_t seed;
    if (config.seed) {
      seed = *config.seed;
    } else {
      seed = std::random_device{}();
      std::cerr << "qmarkov: sampling seed " << seed << "\n";
    }
    counts = qmarkov::sample_counts(state, *config.shots, seed);
  }

  for (std::uint64_t i = 0; i < probs.size(); ++i) {
    std::cout << bit_string(i, config.spec.length) << '\t' << fixed12(probs[i]);
    if (config.shots) std::cout << '\t' << counts[i];
    std::cout << '\n';
  }
  return 0;
}

int cmd_compare(const std::string& path, const GlobalOptions& options) {
  const auto config =
      merge_options(qmarkov::load_chain_config(path), options);
  warn_if_degenerate(config);
  const std::vector<double> quantum =
      qmarkov::simulate_config(config).probabilities();
  const qmarkov::DerivedDtmc dtmc = qmarkov::config_dtmc(config);
  const qmarkov::PathDistribution classical =
      qmarkov::path_distribution(dtmc.initial, dtmc.transitions);

  double max_diff = 0.0;
  for (std::uint64_t i = 0; i < quantum.size(); ++i) {
    const double diff = std::abs(quantum[i] - classical.at(i));
    max_diff = std::max(max_diff, diff);
    std::cout << bit_string(i, config.spec.length) << '\t'
              << fixed12(quantum[i]) << '\t' << fixed12(classical.at(i))
              << '\t' << scientific3(diff) << '\n';
  }
  std::cout << "max_abs_diff\t" << scientific3(max_diff) << '\n';
  if (max_diff >= options.tolerance) {
    std::cerr << "qmarkov: quantum/classical mismatch " << scientific3(max_diff)
              << " exceeds tolerance " << scientific3(options.tolerance)
              << "\n";
    return kExitComparison;
  }
  return 0;
}

int cmd_closed_form(const std::string& path, const GlobalOptions& options) {
  const auto config =
      merge_options(qmarkov::load_chain_config(path), options);
  if (config.initial_basis) {
    throw qmarkov::ConfigError(
        qmarkov::ConfigError::Kind::schema,
        "config: closed-form requires the full circuit (no \"initial_basis\")");
  }
  const qmarkov::StateVector closed = qmarkov::closed_form_state(config.spec);
  const qmarkov::StateVector simulated = qmarkov::simulate_config(config);

  double max_diff = 0.0;
  for (std::uint64_t i = 0; i < closed.size(); ++i) {
    const qmarkov::Complex a = closed.amplitude(i);
    max_diff = std::max(max_diff, std::abs(a - simulated.amplitude(i)));
    std::cout << bit_string(i, config.spec.length) << '\t'
              << fixed12(a.real()) << '\t' << fixed12(a.imag()) << '\t'
              << fixed12(std::norm(a)) << '\n';
  }
  if (max_diff > options.tolerance) {
    std::cerr << "qmarkov: closed form deviates from the simulator by "
              << scientific3(max_diff) << " (tolerance "
              << scientific3(options.tolerance) << ")\n";
    return kExitComparison;
  }
  return 0;
}

int cmd_calibrate(double p, const std::optional<double>& conditional,
                  const std::optional<double>& t_init_option) {
  const auto root_index = [](double t) -> std::string {
    char buf[48];
    if (t == 0.0) return "identity";
    std::snprintf(buf, sizeof buf, "%.12g", 1.0 / t);
    return buf;
  };

  const double t = qmarkov::calibrate_root(p);
  std::cout << "t\t" << fixed12(t) << '\n';
  std::cout << "n\t" << root_index(t) << '\n';
  if (conditional) {
    // The fired branch composes on top of the target's own initial
    // exponent; default that to the t just computed.
    const double t_init = t_init_option.value_or(t);
    const double u = qmarkov::calibrate_conditional(*conditional, t_init);
    std::cout << "u\t" << fixed12(u) << '\n';
    std::cout << "m\t" << root_index(u) << '\n';
  }
  return 0;
}

int cmd_export_qasm(const std::string& path) {
  const auto config = qmarkov::load_chain_config(path);
  std::cout << qmarkov::export_qasm(config.spec, config.initial_basis);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markov chains as quantum circuits: compile, simulate, verify"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  GlobalOptions options;
  std::uint64_t shots_arg = 0;
  std::uint64_t seed_arg = 0;
  app.add_option("--shots", shots_arg, "Sample this many measurement shots");
  app.add_option("--seed", seed_arg, "Seed for shot sampling");
  app.add_option("--tolerance", options.tolerance,
                 "Comparison tolerance (default 1e-9)");

  std::string config_path;
  auto* simulate = app.add_subcommand(
      "simulate", "Print the probability of every chain path");
  simulate->add_option("config", config_path, "JSON chain config")->required();

  auto* compare = app.add_subcommand(
      "compare", "Cross-check the simulator against classical enumeration");
  compare->add_option("config", config_path, "JSON chain config")->required();

  auto* closed_form = app.add_subcommand(
      "closed-form", "Print product-form amplitudes and verify the simulator");
  closed_form->add_option("config", config_path, "JSON chain config")
      ->required();

  auto* export_qasm = app.add_subcommand(
      "export-qasm", "Emit the chain circuit as OpenQASM 2.0");
  export_qasm->add_option("config", config_path, "JSON chain config")
      ->required();

  double p = 0.0;
  std::optional<double> conditional;
  std::optional<double> t_init;
  auto* calibrate = app.add_subcommand(
      "calibrate", "Root exponents realizing target probabilities");
  calibrate->add_option("p", p, "Target P(1) for an unconditioned qubit")
      ->required();
  double conditional_arg = 0.0;
  double t_init_arg = 0.0;
  calibrate->add_option("--conditional", conditional_arg,
                        "Target P(1) on the control-fired branch");
  calibrate->add_option("--t-init", t_init_arg,
                        "Initial exponent the fired branch composes with "
                        "(default: the exponent calibrated from p)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (app.count("--shots")) options.shots = shots_arg;
  if (app.count("--seed")) options.seed = seed_arg;
  if (calibrate->count("--conditional")) conditional = conditional_arg;
  if (calibrate->count("--t-init")) t_init = t_init_arg;

  try {
    if (simulate->parsed()) return cmd_simulate(config_path, options);
    if (compare->parsed()) return cmd_compare(config_path, options);
    if (closed_form->parsed()) return cmd_closed_form(config_path, options);
    if (export_qasm->parsed()) return cmd_export_qasm(config_path);
    if (calibrate->parsed()) return cmd_calibrate(p, conditional, t_init);
  } catch (const qmarkov::ConfigError& e) {
    std::cerr << "qmarkov: " << e.what() << "\n";
    return e.kind() == qmarkov::ConfigError::Kind::schema ? kExitValidation
                                                          : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "qmarkov: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "qmarkov: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
