#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace relaysec::cli {

/// One CSV row: sweep point x scheme x metric.
struct ResultRow {
  std::string sweep_var;
  double sweep_value = 0.0;
  std::string scheme;
  std::string metric;
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t seed = 0;
};

/// Runs the configured scenario and returns the result table.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

}  // namespace relaysec::cli
