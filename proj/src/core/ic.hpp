#pragma once

#include <utility>

#include "phi.hpp"

namespace quenchlab {

enum class Side { left, right, none };

enum class Concavity { concave_up, concave_down, mixed };

// Quadratic initial profile u0(x) = c0 + c1 x + c2 x^2 on [0, a].
// Construction enforces 0 < u0(x) < 1 on [0,a] (exact endpoint/vertex analysis).
struct InitialCondition {
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  double domain_length = 0.0;

  double eval(double x) const { return c0 + x * (c1 + x * c2); }
  double deriv(double x) const { return c1 + 2.0 * c2 * x; }
  double second() const { return 2.0 * c2; }
};

InitialCondition make_ic(double c0, double c1, double c2, double a);

// Hypothesis checks on u0: wall compatibility residuals, concavity class,
// monotonicity, the two slope conditions tying u0' to the wall fluxes, and
// the quench-side prediction they imply.
struct ICValidationReport {
  double compat_left_residual = 0.0;   // |u0'(0) - u0(0)^-p|
  double compat_right_residual = 0.0;  // |u0'(a) - (1-u0(a))^-q|
  Concavity concavity_class = Concavity::mixed;
  bool monotone_ok = false;            // u0' > 0 on [0,a]
  bool slope_cond_right_ok = false;    // u0'(x) >= (x/a)(1-u0(x))^-q on [0,a]
  bool slope_cond_left_ok = false;     // u0'(x) >= ((a-x)/a) u0(x)^-p on [0,a]
  Side predicted_quench_side = Side::none;
};

ICValidationReport validate(const InitialCondition& ic, const ProblemSpec& spec,
                            double tol = 1e-10);

// Built-in worked examples: concave-up data quenching at the right wall and
// concave-down data quenching at the left wall, both wall-compatible by
// construction (q chosen so (1-u0(a))^-q equals u0'(a) exactly).
std::pair<ProblemSpec, InitialCondition> example_A();
std::pair<ProblemSpec, InitialCondition> example_B();

}  // namespace quenchlab
