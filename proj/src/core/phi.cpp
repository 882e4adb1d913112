#include "phi.hpp"

#include <cmath>
#include <stdexcept>

namespace quenchlab {

namespace {

void check_phi(const PhiSpec& phi) {
  // endpoint values are exact for both kinds; evaluate anyway so a bad m fails here
  if (std::abs(phi_eval(phi, 0.0)) > 1e-12 || std::abs(phi_eval(phi, 1.0) - 1.0) > 1e-12)
    throw std::invalid_argument("phi must satisfy phi(0)=0 and phi(1)=1");
  // strict monotonicity on (0,1], sampled
  for (int i = 1; i <= 64; ++i) {
    double s = i / 64.0;
    if (!(phi_derivative(phi, s) > 0.0))
      throw std::invalid_argument("phi must be strictly increasing on (0,1]");
  }
}

}  // namespace

PhiSpec PhiSpec::identity() {
  PhiSpec out;
  out.kind = PhiKind::identity;
  check_phi(out);
  return out;
}

PhiSpec PhiSpec::power(double m) {
  if (!(m > 0.0 && m < 1.0))
    throw std::invalid_argument("power phi requires 0 < m < 1");
  PhiSpec out;
  out.kind = PhiKind::power;
  out.m = m;
  check_phi(out);
  return out;
}

double phi_eval(const PhiSpec& phi, double s) {
  if (s < -1e-12 || s > 1.0 + 1e-12)
    throw std::domain_error("phi_eval: s outside [0,1]");
  s = s < 0.0 ? 0.0 : (s > 1.0 ? 1.0 : s);
  if (phi.kind == PhiKind::identity) return s;
  return std::pow(s, 1.0 / phi.m);
}

double phi_derivative(const PhiSpec& phi, double s) {
  if (phi.kind == PhiKind::identity) {
    if (s < -1e-12 || s > 1.0 + 1e-12)
      throw std::domain_error("phi_derivative: s outside [0,1]");
    return 1.0;
  }
  if (s <= 0.0)
    throw std::domain_error("phi_derivative: power-kind derivative degenerates at s=0");
  if (s > 1.0 + 1e-12)
    throw std::domain_error("phi_derivative: s outside (0,1]");
  double e = 1.0 / phi.m;
  return e * std::pow(s, e - 1.0);
}

ProblemSpec make_problem(double a, double p, double q, double r, PhiSpec phi) {
  if (!(a > 0.0)) throw std::invalid_argument("domain length a must be > 0");
  if (!(p > 0.0)) throw std::invalid_argument("left-flux exponent p must be > 0");
  if (!(q > 0.0)) throw std::invalid_argument("right-flux exponent q must be > 0");
  if (!(r >= 2.0)) throw std::invalid_argument("diffusion exponent r must be >= 2");
  ProblemSpec out;
  out.a = a;
  out.p = p;
  out.q = q;
  out.r = r;
  out.phi = phi;
  return out;
}

bool is_heat_case(const ProblemSpec& spec) {
  return spec.r == 2.0 && spec.phi.kind == PhiKind::identity;
}

double phi_b_coeff(const PhiSpec& phi, double s) {
  return 1.0 / phi_derivative(phi, s);
}

}  // namespace quenchlab
