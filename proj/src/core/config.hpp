#pragma once

#include <stdexcept>
#include <string>

#include "integrate.hpp"

namespace quenchlab {

// Parse or validation failure; the message carries a 1-based line number
// when the offending line is known.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flat key = value configuration with sections [problem], [ic], [grid],
// [stepping], [analysis], [output]; keys mirror the type field names.
// [ic] accepts either a builtin `name` (example_A, example_B), which seeds
// both the problem and the profile before explicit keys override them, or
// the raw coefficients c0, c1, c2.
struct ExperimentConfig {
  ProblemSpec problem;
  InitialCondition ic = InitialCondition{};
  bool ic_set = false;

  int N = 124;

  double tau0 = 1e-6;
  double tau1 = 1e-6;
  double tau_min = 1e-9;
  double tau_max = std::numeric_limits<double>::quiet_NaN();  // default 10*tau0
  StepMode mode = StepMode::adaptive;
  double fixed_tau = 0.0;
  double max_time = std::numeric_limits<double>::infinity();
  std::int64_t max_steps = 50'000'000;
  double epsilon_quench = 1e-4;

  double window_decades = 2.0;
  double conv_tau = 0.0;
  double conv_time = 0.0;
  int conv_divisor = 0;

  std::string output_dir = "out";
  std::int64_t sample_stride = 5000;
};

// Throws ConfigError on malformed text or out-of-range values.
ExperimentConfig parse_config_text(const std::string& text);

// Reads the file and parses it; a missing/unreadable file is a ConfigError.
ExperimentConfig load_config(const std::string& path);

RunConfig to_run_config(const ExperimentConfig& cfg);

}  // namespace quenchlab
