#pragma once

#include <vector>

#include "integrate.hpp"

namespace quenchlab {

// Asymptotic wall-approach exponent: 1/(2(q+1)) at the right wall,
// 1/(2(p+1)) at the left wall.
double theoretical_rate(Side side, const ProblemSpec& spec);

struct BoundsReport {
  Side side = Side::none;
  double T_lower = 0.0;
  double C_envelope = 0.0;
  double rate_theory = 0.0;
};

// Closed-form lower bound on the quenching time plus the one-sided envelope
// constant for the given wall:
//   right: T = a (1 - u0(a))^{2q+2} / (2 (qa+1)(q+1)),
//          C = [(qa+1)(2q+2)/a]^{1/(2q+2)}
//   left:  T = a u0(0)^{2p+2} / (2 (pa+1)(p+1)),
//          C = [(pa+1)(2p+2)/a]^{1/(2p+2)}
BoundsReport lower_bound_T(Side side, const ProblemSpec& spec,
                           const InitialCondition& ic);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  double t_lo = 0.0;  // window bounds in T - t units (actual samples used)
  double t_hi = 0.0;
  int n_points = 0;
};

// Ordinary least squares on (ln(T - t), ln y), y the distance of the
// quenching wall from its singular value.  The window spans the last
// `window_decades` decades of T - t and ends one sample before termination
// (the final sample sits on the threshold clamp and distorts the
// asymptote).  Throws std::runtime_error when fewer than 10 samples land
// in the window.
RateFit fit_quench_rate(const RunRecord& rec, const QuenchReport& rep,
                        double window_decades);

struct EnvelopeReport {
  // fraction of window samples with y <= C (T - t)^{rate}
  double fraction_satisfied = 0.0;
  int n_window = 0;
  // the constant-free companion bound reduces to slope-sign consistency
  bool slope_sign_ok = false;
};

// Checks the one-sided envelope over the fitted window, using T = T_est.
EnvelopeReport check_envelopes(const RunRecord& rec, const QuenchReport& rep,
                               const BoundsReport& bounds, const RateFit& fit);

struct ConvergenceReport {
  std::vector<double> per_node_order;
  double median_order = 0.0;
  int nodes_used = 0;
};

// Observed temporal order from three fixed-step solutions at one common
// time on one grid: p_i = ln(|v_tau - v_ref|_i / |v_half - v_ref|_i)/ln 2,
// nodes with reference difference below 1e-13 excluded as indeterminate.
// Throws std::runtime_error when every node is excluded.
ConvergenceReport estimate_order(const std::vector<double>& v_tau,
                                 const std::vector<double>& v_half,
                                 const std::vector<double>& v_ref);

}  // namespace quenchlab
