#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "relaysec/model.hpp"
#include "relaysec/montecarlo.hpp"

namespace relaysec::cli {

/// Bad or unknown configuration; maps to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem trouble; maps to exit code 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  std::string var;
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;

  bool active() const { return !var.empty(); }
  std::vector<double> values() const;
};

struct ExperimentConfig {
  std::string scenario = "custom";
  SystemParams params;  // watts inside; config keys use dBm
  std::vector<Scheme> schemes;
  double fixed_t = 0.35;
  SweepSpec sweep;
  std::int64_t n_trials = 100000;
  std::uint64_t master_seed = 1;
  int n_workers = 0;
  std::string output_path;
  // Fixed scalar channel gains for the instantaneous-capacity scenarios.
  double x_rd = 1.0;
  double x_re = 1.0;
  double x_je = 1.0;
};

/// Preset for a scenario name (fig1, fig2, fig3, custom). Throws
/// ConfigError for anything else.
ExperimentConfig scenario_defaults(const std::string& scenario);

/// Applies one `key = value` pair; throws ConfigError naming the key.
void apply_override(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Flat `key = value` file, '#' comments. Throws ConfigError / IoError.
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

/// Sets a sweepable SystemParams field (dBm keys converted here). Throws
/// ConfigError for unknown variables.
void set_sweep_variable(SystemParams& params, const std::string& var, double value);

/// Parses a comma-separated scheme list such as
/// "proposed,fixed_t,eb,ib,no_jammer".
std::vector<Scheme> parse_schemes(const std::string& list, double fixed_t);

}  // namespace relaysec::cli
