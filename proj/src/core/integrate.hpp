#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "discretize.hpp"

namespace quenchlab {

enum class StepMode { adaptive, fixed_step };

enum class Termination { quenched, max_time, max_steps, step_floor_stall };

// One retained trajectory point.  d_left/d_right are the wall components of
// the nodal time derivative F/h^2 at the sampled state (kept for the blow-up
// witness; the persisted CSV carries the first six fields).
struct Sample {
  double t = 0.0;
  double u_left = 0.0;
  double u_right = 0.0;
  double tau = 0.0;  // step that produced this state (0 for the initial one)
  double mass = 0.0;
  double flux_balance = 0.0;
  double d_left = 0.0;
  double d_right = 0.0;
};

struct RunRecord {
  std::vector<Sample> samples;
  std::int64_t step_count = 0;
  Termination termination = Termination::max_steps;
  // audit counters over every accepted state
  std::int64_t monotonicity_violations = 0;
  std::int64_t interior_sign_violations = 0;
};

struct QuenchReport {
  Side side = Side::none;
  double T_est = std::numeric_limits<double>::quiet_NaN();
  double epsilon = 0.0;
  double wall_value_at_stop = std::numeric_limits<double>::quiet_NaN();
  // max |du/dt| at the quenching wall over the final 10 samples
  double blowup_indicator = std::numeric_limits<double>::quiet_NaN();
};

// Arc-length step controller state: the two most recent accepted steps and
// the three most recent nodal derivative vectors d = F/h^2.
struct StepController {
  double tau_prev2 = 0.0;
  double tau_prev = 0.0;
  std::vector<double> d_km2, d_km1, d_k;
  double tau_min = 0.0;
  double tau_max = 0.0;
  StepMode mode = StepMode::adaptive;
  int warm = 0;  // derivative vectors seen
};

// tau_next^2 = tau_prev^2 + min_i{(d^{k-1}_i - d^{k-2}_i)^2 - (d^k_i - d^{k-1}_i)^2},
// clamped to [tau_min, tau_max]; non-positive radicand drops to tau_min.
double adapt_tau(const StepController& ctrl);

enum class StepOutcome { ok, reject_left, reject_right, reject_nonfinite };

// Signature of a right-hand-side provider (rhs-compatible); returning false
// signals a singular flux at a wall.
using RhsFn = bool (*)(const std::vector<double>&, const ProblemSpec&,
                       const Grid&, std::vector<double>&);

// One two-stage step: predictor v* = v + 2 mu F(v) (forward Euler over tau),
// corrector v + mu (F(v*) + F(v)) (trapezoid), mu = tau/(2 h^2).  F_v is the
// caller-supplied evaluation of the RHS at v.  A wall leaving (0,1) in the
// predictor or the corrector is a rejection signal, not an error; on a wall
// rejection `out` holds the offending trial state.
StepOutcome step(const std::vector<double>& v, const std::vector<double>& F_v,
                 double tau, const ProblemSpec& spec, const Grid& g,
                 std::vector<double>& scratch_pred, std::vector<double>& scratch_F,
                 std::vector<double>& out);

// Same scheme with the corrector-stage RHS supplied by the caller (lets a
// synthetic RHS be injected; step() passes the real one).
StepOutcome step_with(const std::vector<double>& v, const std::vector<double>& F_v,
                      double tau, const ProblemSpec& spec, const Grid& g, RhsFn f,
                      std::vector<double>& scratch_pred,
                      std::vector<double>& scratch_F, std::vector<double>& out);

// Threshold detection: left when u_0 <= eps, right when u_{N+1} >= 1 - eps;
// simultaneous hits resolve to the deeper relative excursion.
Side detect_quench(const std::vector<double>& u, double epsilon);

struct RunConfig {
  ProblemSpec problem;
  InitialCondition ic;
  int N = 124;
  double tau0 = 1e-6;
  double tau1 = 1e-6;
  double tau_min = 1e-9;
  double tau_max = 1e-5;
  double epsilon_quench = 1e-4;
  std::int64_t sample_stride = 5000;
  StepMode mode = StepMode::adaptive;
  double fixed_tau = 0.0;  // fixed mode only
  double max_time = std::numeric_limits<double>::infinity();
  std::int64_t max_steps = 50'000'000;
};

struct RunResult {
  RunRecord record;
  QuenchReport quench;
  std::vector<double> final_state;
  double t_final = 0.0;
};

RunResult run(const RunConfig& cfg);

const char* to_string(Termination t);
const char* to_string(Side s);

}  // namespace quenchlab
