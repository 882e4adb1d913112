#pragma once

#include <string>

#include "analysis.hpp"
#include "config.hpp"

namespace quenchlab {

// status follows the process exit contract:
//   0 ok, 1 configuration error, 2 hypothesis failure, 3 runtime failure
struct CommandResult {
  int status = 0;
  std::string json;  // report for stdout
};

// Checks the configured profile against the wall-compatibility and shape
// hypotheses; status 2 when a checked hypothesis fails.
CommandResult cmd_validate_ic(const ExperimentConfig& cfg);

// Integrates the configured experiment and writes trajectory.csv,
// summary.json, loglog.csv, and manifest.json (last) into output_dir.
// Status 3 on a solver stall / singular abort; the summary still records
// the termination cause.
CommandResult cmd_run(const ExperimentConfig& cfg);

// Three fixed-step runs (tau, tau/2, tau/divisor) to the common time
// conv_time; writes convergence.json and returns the observed-order report.
// Status 1 when the convergence block is incomplete or divisor < 4,
// status 3 when the comparison time is not reached (quench intervenes).
CommandResult cmd_convergence(const ExperimentConfig& cfg);

}  // namespace quenchlab
