#include "ic.hpp"

#include <cmath>
#include <stdexcept>

namespace quenchlab {

InitialCondition make_ic(double c0, double c1, double c2, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("initial condition needs a > 0");
  InitialCondition ic{c0, c1, c2, a};
  // range check at the endpoints and, for true quadratics, at the vertex
  auto in_open_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_open_unit(ic.eval(0.0)) || !in_open_unit(ic.eval(a)))
    throw std::invalid_argument("u0 must stay inside (0,1) on [0,a]");
  if (c2 != 0.0) {
    double xv = -c1 / (2.0 * c2);
    if (xv > 0.0 && xv < a && !in_open_unit(ic.eval(xv)))
      throw std::invalid_argument("u0 must stay inside (0,1) on [0,a]");
  }
  return ic;
}

ICValidationReport validate(const InitialCondition& ic, const ProblemSpec& spec,
                            double tol) {
  ICValidationReport rep;
  const double a = spec.a;

  rep.compat_left_residual =
      std::abs(ic.deriv(0.0) - std::pow(ic.eval(0.0), -spec.p));
  rep.compat_right_residual =
      std::abs(ic.deriv(a) - std::pow(1.0 - ic.eval(a), -spec.q));

  // quadratics carry their concavity in c2 exactly
  rep.concavity_class = ic.c2 > 0.0   ? Concavity::concave_up
                        : ic.c2 < 0.0 ? Concavity::concave_down
                                      : Concavity::mixed;

  // u0' is linear, so positivity on [0,a] is an endpoint check
  rep.monotone_ok = ic.deriv(0.0) > 0.0 && ic.deriv(a) > 0.0;

  // slope conditions sampled on a dense grid (1001 points)
  const int n = 1000;
  double min_right = 1e300, min_left = 1e300;
  for (int i = 0; i <= n; ++i) {
    double x = a * i / n;
    double du = ic.deriv(x);
    double u = ic.eval(x);
    min_right = std::min(min_right, du - (x / a) * std::pow(1.0 - u, -spec.q));
    min_left = std::min(min_left, du - ((a - x) / a) * std::pow(u, -spec.p));
  }
  // the built-in examples hit equality at one wall, so exact zero cannot
  // survive rounding; tol supplies the slack
  rep.slope_cond_right_ok = min_right >= -tol;
  rep.slope_cond_left_ok = min_left >= -tol;

  if (rep.monotone_ok && rep.concavity_class == Concavity::concave_up)
    rep.predicted_quench_side = Side::right;
  else if (rep.monotone_ok && rep.concavity_class == Concavity::concave_down)
    rep.predicted_quench_side = Side::left;
  else
    rep.predicted_quench_side = Side::none;

  return rep;
}

std::pair<ProblemSpec, InitialCondition> example_A() {
  // u0 = 1/4 + 4x + 4x^2 on [0, 1/8]; u0'(0) = 4 = u0(0)^-1 and
  // u0'(1/8) = 5 = (1 - u0(1/8))^-q with q = ln 5 / ln(16/3)
  double a = 0.125;
  double q = std::log(5.0) / std::log(16.0 / 3.0);
  ProblemSpec spec = make_problem(a, 1.0, q, 2.0, PhiSpec::identity());
  return {spec, make_ic(0.25, 4.0, 4.0, a)};
}

std::pair<ProblemSpec, InitialCondition> example_B() {
  // u0 = 1/4 + 4x - 2x^2 on [0, 1/8]; u0'(0) = 4 = u0(0)^-1 and
  // u0'(1/8) = 7/2 = (1 - u0(1/8))^-q with q = ln(7/2) / ln(32/9)
  double a = 0.125;
  double q = std::log(3.5) / std::log(32.0 / 9.0);
  ProblemSpec spec = make_problem(a, 1.0, q, 2.0, PhiSpec::identity());
  return {spec, make_ic(0.25, 4.0, -2.0, a)};
}

}  // namespace quenchlab
