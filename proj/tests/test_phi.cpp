#include <cmath>
#include <stdexcept>

#include "core/phi.hpp"
#include "doctest.h"

using namespace quenchlab;

TEST_CASE("identity phi is the identity with unit derivative") {
  PhiSpec id = PhiSpec::identity();
  CHECK(phi_eval(id, 0.0) == 0.0);
  CHECK(phi_eval(id, 1.0) == 1.0);
  CHECK(phi_eval(id, 0.37) == 0.37);
  CHECK(phi_derivative(id, 0.0) == 1.0);
  CHECK(phi_derivative(id, 0.9) == 1.0);
  CHECK(phi_b_coeff(id, 0.2) == 1.0);
}

TEST_CASE("power phi evaluates s^(1/m)") {
  PhiSpec half = PhiSpec::power(0.5);  // phi(s) = s^2
  CHECK(phi_eval(half, 0.25) == doctest::Approx(0.0625).epsilon(1e-15));
  CHECK(phi_eval(half, 0.0) == 0.0);
  CHECK(phi_eval(half, 1.0) == 1.0);

  PhiSpec third = PhiSpec::power(1.0 / 3.0);  // phi(s) = s^3
  CHECK(phi_eval(third, 0.5) == doctest::Approx(0.125).epsilon(1e-15));

  // phi'(s) = 2s for m = 1/2, so B = 1/(2s)
  CHECK(phi_derivative(half, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(phi_derivative(half, 0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(phi_b_coeff(half, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("phi domain and parameter guards") {
  PhiSpec id = PhiSpec::identity();
  CHECK_THROWS_AS(phi_eval(id, -0.1), std::domain_error);
  CHECK_THROWS_AS(phi_eval(id, 1.1), std::domain_error);

  PhiSpec half = PhiSpec::power(0.5);
  CHECK_THROWS_AS(phi_derivative(half, 0.0), std::domain_error);

  CHECK_THROWS_AS(PhiSpec::power(0.0), std::invalid_argument);
  CHECK_THROWS_AS(PhiSpec::power(1.0), std::invalid_argument);
  CHECK_THROWS_AS(PhiSpec::power(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(PhiSpec::power(2.0), std::invalid_argument);
}

TEST_CASE("problem construction validates every exponent") {
  PhiSpec id = PhiSpec::identity();
  ProblemSpec ok = make_problem(0.125, 1.0, 1.0, 2.0, id);
  CHECK(ok.a == 0.125);
  CHECK(is_heat_case(ok));

  CHECK_THROWS_AS(make_problem(0.0, 1.0, 1.0, 2.0, id), std::invalid_argument);
  CHECK_THROWS_AS(make_problem(0.125, 0.0, 1.0, 2.0, id), std::invalid_argument);
  CHECK_THROWS_AS(make_problem(0.125, 1.0, -1.0, 2.0, id), std::invalid_argument);
  CHECK_THROWS_AS(make_problem(0.125, 1.0, 1.0, 1.5, id), std::invalid_argument);

  CHECK_FALSE(is_heat_case(make_problem(0.125, 1.0, 1.0, 3.0, id)));
  CHECK_FALSE(is_heat_case(make_problem(0.125, 1.0, 1.0, 2.0, PhiSpec::power(0.5))));
}
