#pragma once

#include <vector>

#include "ic.hpp"
#include "phi.hpp"

namespace quenchlab {

// Uniform grid x_j = j h, j = 0..N+1, h = a/(N+1); the last node is pinned
// to a exactly rather than accumulated.
struct Grid {
  int N = 0;
  double h = 0.0;
  std::vector<double> nodes;
};

Grid build_grid(double a, int N);

// Semidiscrete right-hand side with the scaling h^2 du/dt = F.
//
// Heat case (r=2, identity phi), ghost nodes eliminated through the wall
// gradients u_x(0) = u0^-p and u_x(a) = (1-u_{N+1})^-q:
//   F_0     = 2 u_1 - 2 u_0 - 2h u_0^-p
//   F_k     = u_{k-1} - 2 u_k + u_{k+1}
//   F_{N+1} = 2 u_N - 2 u_{N+1} + 2h (1-u_{N+1})^-q
//
// Returns false (singular flux) when u_0 <= 0 or u_{N+1} >= 1; F is then
// unspecified.  Callers treat that as a step-rejection signal.
bool rhs_heat(const std::vector<double>& u, const ProblemSpec& spec,
              const Grid& g, std::vector<double>& F);

// General r >= 2 and phi: F = B(u) h (Phi_{j+1/2} - Phi_{j-1/2}) with the
// half-point flux Phi = |d|^{r-2} d, d the one-sided gradient, and wall
// half-fluxes evaluated from the prescribed gradients.  Reduces to rhs_heat
// arithmetic exactly at r=2, identity phi.
bool rhs_general(const std::vector<double>& u, const ProblemSpec& spec,
                 const Grid& g, std::vector<double>& F);

// Dispatches to rhs_heat when is_heat_case(spec), else rhs_general.
bool rhs(const std::vector<double>& u, const ProblemSpec& spec, const Grid& g,
         std::vector<double>& F);

// Trapezoid approximation of the mass integral of phi(u) over [0,a].
double mass(const std::vector<double>& u, const ProblemSpec& spec, const Grid& g);

// Theoretical mass derivative: (1-u_{N+1})^{-q(r-1)} - u_0^{-p(r-1)}.
// Throws std::domain_error when a wall sits at or past its singular value.
double flux_balance(const std::vector<double>& u, const ProblemSpec& spec);

}  // namespace quenchlab
