#pragma once

// Shared numeric kernels: adaptive Gauss-Kronrod quadrature on finite and
// semi-infinite ranges, principal-value integrals, bracketed root finding
// and argument-principle winding numbers.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

#include "rzlab/errors.hpp"

namespace rzlab::numerics {

using cplx = std::complex<double>;
using RealToComplex = std::function<cplx(double)>;
using RealToReal = std::function<double(double)>;
using ComplexToComplex = std::function<cplx(cplx)>;

inline constexpr std::size_t kDefaultEvaluationBudget = 1'000'000;

struct QuadratureResult {
  cplx value{0.0, 0.0};
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, QuadratureResult best)
      : Error(what), best_(best) {}
  const QuadratureResult& best_estimate() const noexcept { return best_; }

 private:
  QuadratureResult best_;
};

struct BracketInterval {
  double lo;
  double hi;
  BracketInterval(double lo_, double hi_);
  double width() const { return hi - lo; }
};

struct ContourRectangle {
  double re_min;
  double re_max;
  double im_min;
  double im_max;
  ContourRectangle(double re_min_, double re_max_, double im_min_, double im_max_);
};

/// Adaptive 7/15-point Gauss-Kronrod with global bisection of the worst
/// subinterval. Stops when the summed error estimate is below `tol`.
QuadratureResult integrate_adaptive(const RealToComplex& f, double a, double b, double tol,
                                    std::size_t max_evaluations = kDefaultEvaluationBudget);

/// Integral over [a, infinity) through x = a + t/(1-t). The t-range is
/// processed in dyadic blocks [1-2^-j, 1-2^-(j+1)], each of which covers
/// roughly a doubling of x; blocks are added until their contribution is
/// negligible. A tail that keeps not shrinking raises DivergenceError.
QuadratureResult integrate_semi_infinite(const RealToComplex& f, double a, double tol,
                                         std::size_t max_evaluations = kDefaultEvaluationBudget);

/// Principal value of the integral of f(x)/(x-c) over [a,b] by symmetric
/// excision: the part symmetric about c is folded into the regular integrand
/// (f(c+u) - f(c-u))/u, the leftover one-sided part is integrated directly.
cplx principal_value_integral(const RealToComplex& f, double c, double a, double b, double tol,
                              std::size_t max_evaluations = kDefaultEvaluationBudget);

/// Principal value on sampled data (strictly increasing nodes). Uses
/// subtraction of the singular part, composite Simpson on the regular
/// remainder and the closed-form log term. `c` must lie inside the grid.
cplx principal_value_sampled(std::span<const double> nodes, std::span<const cplx> values, double c);

/// Local cubic (four-node Lagrange) interpolation of sampled data at x.
cplx interpolate_sampled(std::span<const double> nodes, std::span<const cplx> values, double x);

/// Composite Simpson (trapezoid on a trailing odd interval) for sampled data.
cplx integrate_sampled(std::span<const double> nodes, std::span<const cplx> values);

/// Brent's method. Returns a point with bracket width below `tol`.
double find_root_bracketed(const RealToReal& f, BracketInterval interval, double tol,
                           int max_iterations = 500);

/// Total change of arg g along the positively oriented boundary of `rect`,
/// divided by 2 pi. Each side starts with `samples_per_side` steps and steps
/// are bisected until consecutive phase increments are below pi/2.
int winding_number(const ComplexToComplex& g, const ContourRectangle& rect,
                   std::size_t samples_per_side = 64, double magnitude_floor = 1e-300);

}  // namespace rzlab::numerics
