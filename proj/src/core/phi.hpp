#pragma once

namespace quenchlab {

// Nonlinearity phi in (phi(u))_t = (|u_x|^{r-2} u_x)_x.
// identity: phi(s) = s.  power: phi(s) = s^(1/m) with 0 < m < 1.
enum class PhiKind { identity, power };

struct PhiSpec {
  PhiKind kind = PhiKind::identity;
  double m = 0.5;  // power kind only

  static PhiSpec identity();
  static PhiSpec power(double m);
};

// phi(s) on [0,1]; throws std::domain_error outside (beyond 1e-12 slack).
double phi_eval(const PhiSpec& phi, double s);

// phi'(s) on (0,1]; throws std::domain_error at s=0 for the power kind
// (the derivative degenerates there and callers must handle the limit).
double phi_derivative(const PhiSpec& phi, double s);

// Full parameterization of the problem on [0,a]:
//   (phi(u))_t = (|u_x|^{r-2} u_x)_x
//   u_x(0,t) = u(0,t)^-p,  u_x(a,t) = (1 - u(a,t))^-q
struct ProblemSpec {
  double a = 0.125;
  double p = 1.0;
  double q = 1.0;
  double r = 2.0;
  PhiSpec phi;
};

// Validating constructor; throws std::invalid_argument on a<=0, p<=0, q<=0, r<2.
ProblemSpec make_problem(double a, double p, double q, double r, PhiSpec phi);

// The r=2, identity-phi case has a dedicated linear-stencil path.
bool is_heat_case(const ProblemSpec& spec);

// B(u) = 1/phi'(u), the coefficient in u_t = B(u) (|u_x|^{r-2} u_x)_x.
double phi_b_coeff(const PhiSpec& phi, double s);

}  // namespace quenchlab
