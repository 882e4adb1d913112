#include <cmath>
#include <stdexcept>

#include "core/ic.hpp"
#include "doctest.h"

using namespace quenchlab;

TEST_CASE("profile construction enforces the open unit range") {
  CHECK_NOTHROW(make_ic(0.25, 4.0, 4.0, 0.125));
  CHECK_NOTHROW(make_ic(0.25, 4.0, -2.0, 0.125));
  // wall values must be strictly interior
  CHECK_THROWS_AS(make_ic(0.0, 4.0, 4.0, 0.125), std::invalid_argument);
  CHECK_THROWS_AS(make_ic(0.5, 4.0, 0.0, 0.125), std::invalid_argument);  // u0(a)=1
  // interior vertex dipping out of range
  CHECK_THROWS_AS(make_ic(0.05, -2.0, 20.0, 0.125), std::invalid_argument);
  CHECK_THROWS_AS(make_ic(0.25, 4.0, 4.0, 0.0), std::invalid_argument);
}

TEST_CASE("first worked profile: concave up, right-wall compatible") {
  auto [spec, ic] = example_A();
  CHECK(spec.a == 0.125);
  CHECK(spec.p == 1.0);
  CHECK(spec.r == 2.0);
  // q solves (16/3)^q = 5, tying the right flux to u0'(a) = 5
  CHECK(std::pow(16.0 / 3.0, spec.q) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(spec.q == doctest::Approx(0.96144597985775172).epsilon(1e-15));

  CHECK(ic.eval(0.0) == 0.25);
  CHECK(ic.eval(0.125) == doctest::Approx(0.8125).epsilon(1e-15));
  CHECK(ic.deriv(0.0) == 4.0);
  CHECK(ic.deriv(0.125) == doctest::Approx(5.0).epsilon(1e-15));

  ICValidationReport rep = validate(ic, spec);
  CHECK(rep.compat_left_residual <= 1e-12);
  CHECK(rep.compat_right_residual <= 1e-12);
  CHECK(rep.concavity_class == Concavity::concave_up);
  CHECK(rep.monotone_ok);
  CHECK(rep.slope_cond_right_ok);
  CHECK(rep.predicted_quench_side == Side::right);
}

TEST_CASE("second worked profile: concave down, left-wall compatible") {
  auto [spec, ic] = example_B();
  // q solves (32/9)^q = 7/2, tying the right flux to u0'(a) = 3.5
  CHECK(std::pow(32.0 / 9.0, spec.q) == doctest::Approx(3.5).epsilon(1e-14));
  CHECK(spec.q == doctest::Approx(0.98758516644509673).epsilon(1e-15));

  CHECK(ic.eval(0.125) == doctest::Approx(0.71875).epsilon(1e-15));
  CHECK(ic.deriv(0.125) == doctest::Approx(3.5).epsilon(1e-15));

  ICValidationReport rep = validate(ic, spec);
  CHECK(rep.compat_left_residual <= 1e-12);
  CHECK(rep.compat_right_residual <= 1e-12);
  CHECK(rep.concavity_class == Concavity::concave_down);
  CHECK(rep.monotone_ok);
  CHECK(rep.slope_cond_left_ok);
  CHECK(rep.predicted_quench_side == Side::left);
}

TEST_CASE("flat-start profile fails the left compatibility hypothesis") {
  // c1 = 0 with p = 1: u0'(0) = 0 but u0(0)^-1 = 4
  ProblemSpec spec = make_problem(0.125, 1.0, 1.0, 2.0, PhiSpec::identity());
  InitialCondition ic = make_ic(0.25, 0.0, 4.0, 0.125);
  ICValidationReport rep = validate(ic, spec);
  CHECK(rep.compat_left_residual == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_FALSE(rep.monotone_ok);  // u0'(0) = 0 is not strictly increasing
  CHECK(rep.predicted_quench_side == Side::none);
}

TEST_CASE("predicted side follows concavity for monotone profiles") {
  ProblemSpec spec = make_problem(0.125, 1.0, 1.0, 2.0, PhiSpec::identity());
  // concave up & increasing -> right; concave down & increasing -> left
  CHECK(validate(make_ic(0.3, 1.0, 2.0, 0.125), spec).predicted_quench_side ==
        Side::right);
  CHECK(validate(make_ic(0.3, 1.0, -2.0, 0.125), spec).predicted_quench_side ==
        Side::left);
  // linear profile has no concavity class
  ICValidationReport lin = validate(make_ic(0.3, 1.0, 0.0, 0.125), spec);
  CHECK(lin.concavity_class == Concavity::mixed);
  CHECK(lin.predicted_quench_side == Side::none);
}
