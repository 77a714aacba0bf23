#pragma once

// Inverse-square potential lambda / y^2 on y > 0 with an infinite barrier at
// y <= 0. Units 2m / hbar^2 = 1.

#include <complex>
#include <utility>
#include <vector>

#include "rzlab/numerics.hpp"

namespace rzlab::quantum {

using cplx = std::complex<double>;

/// Integration never proceeds below this radius.
inline constexpr double kMinRadius = 1e-3;

struct PotentialSpec {
  cplx lambda;
};

/// nu^2 = lambda + 1/4 with the principal root; Re nu = 0 resolved to Im nu >= 0.
struct OrderParameter {
  cplx lambda;
  cplx nu;
  static OrderParameter from_lambda(cplx lambda);
};

/// lambda = s (s - 1). The zero-energy equation f'' + lambda0 f / y^2 = 0 uses
/// lambda0 = s (1 - s) = -lambda.
cplx coupling_from_s(cplx s);

/// lambda / y^2. Throws BarrierError for y <= 0.
cplx potential(const PotentialSpec& spec, double y);

/// (1/2)(y^s + y^{1-s}) and (y^s - y^{1-s}) / (2s - 1); the second becomes
/// y^{1/2} log y at s = 1/2 and is summed as a series for |2s - 1| < 1e-4.
std::pair<cplx, cplx> zero_energy_solutions(cplx s, double y);

/// f(k, y) = sqrt(pi k y / 2) exp(i (pi nu / 2 + pi / 4)) H1_nu(k y), the
/// solution of f'' + (k^2 - (nu^2 - 1/4) / y^2) f = 0 behaving as exp(iky).
/// Requires 0 < k y <= 30.
cplx jost_solution_analytic(double k, cplx nu, double y);

/// |f(k, y) exp(-iky) - 1|.
double asymptotic_residual(double k, cplx nu, double y);

/// Relative residual of the radial equation for jost_solution_analytic,
/// second derivative from a five-point stencil.
double jost_ode_residual(double k, cplx nu, double y);

struct JostSample {
  double y;
  cplx value;
  cplx derivative;
};

/// Integrates f'' = (lambda / y^2 - k^2) f inward from y_start to y_end with
/// adaptive Dormand-Prince steps. Initial data come from the large-argument
/// Hankel series at k y_start, which must satisfy |envelope - 1| < 1e-3
/// there. Returns the solution at each point of `sample_at` (inside
/// [y_end, y_start], any order), or at every accepted step when empty.
/// Throws IntegrationLimitError if y_end < kMinRadius or the step size
/// collapses, PreconditionError if the start is not asymptotic.
/// Smallest y (times a safety factor of 2) at which the leading asymptotic
/// exp(iky) is within 1e-3 of the Jost solution, judged by the first
/// correction term; never below 40 / k.
double asymptotic_start_radius(double k, cplx lambda);

std::vector<JostSample> jost_solution_ode(double k, cplx lambda, double y_end, double y_start,
                                          const std::vector<double>& sample_at = {},
                                          double tol = 1e-12);

/// Integral over (0, inf) of y K_nu(y)^2. Throws PoleError for nonzero
/// integer nu and DivergenceError for |Re nu| >= 1.
numerics::QuadratureResult k_moment_integral(cplx nu);

/// Integral over (0, inf) of y |K_nu(y)|^2. Same preconditions.
numerics::QuadratureResult k_norm_integral(cplx nu);

/// coefficient * pi nu / sin(pi nu), with limit `coefficient` at nu = 0.
/// Throws PoleError for nonzero integer nu.
cplx k_moment_closed_form(cplx nu, double coefficient);

/// The closed-form constant implied by quadrature:
/// k_moment_integral(1/2) / (pi (1/2) / sin(pi / 2)).
double fitted_moment_coefficient();

/// |Im lambda| * (2 / pi) (1 / tau) * integral of y |K_nu(y)|^2, nu from lambda.
/// Exactly zero for real lambda.
double khuri_reality_residual(cplx lambda, double tau);

}  // namespace rzlab::quantum
