#pragma once

// Complex special functions: log-gamma, modified Bessel K of complex order,
// Hankel function of the first kind of complex order.

#include <complex>

namespace rzlab::specfun {

using cplx = std::complex<double>;

/// Bessel order; any finite complex value.
struct ComplexOrder {
  cplx nu;
  ComplexOrder(cplx nu_);  // NOLINT(google-explicit-constructor)
  ComplexOrder(double nu_) : ComplexOrder(cplx(nu_, 0.0)) {}  // NOLINT
};

/// Principal-branch log Gamma (continuous along the positive real axis).
/// Stirling series after upward shift; reflection for Re z < 1/2.
cplx log_gamma(cplx z);

/// log sin(z) without overflow for large |Im z|. Branch is chosen so that
/// log_sin(conj z) = conj(log_sin z).
cplx log_sin(cplx z);

/// K_nu(y) = integral_0^inf exp(-y cosh t) cosh(nu t) dt, y > 0, |Re nu| <= 5.
cplx bessel_k(ComplexOrder order, double y);

/// Bessel J_nu(x) by power series (x > 0).
cplx bessel_j_series(cplx nu, double x);

/// H^(1)_nu(x) for 0 < x <= 30. Half-integer real orders use the terminating
/// closed form; integer orders a Richardson-extrapolated symmetric limit;
/// everything else the J_{-nu}, J_nu combination.
cplx hankel1(ComplexOrder order, double x);

/// Reduced Hankel function sqrt(pi x / 2) exp(-i(x - nu pi/2 - pi/4)) H^(1)_nu(x),
/// which tends to 1 as x grows. Same evaluation routes and range as hankel1.
cplx hankel1_envelope(ComplexOrder order, double x);

/// Large-x asymptotic series of the reduced Hankel function,
/// sum_m i^m a_m(nu) / x^m, truncated at the smallest term (or at max_terms).
/// Exact for half-integer order. No range restriction on x.
cplx hankel1_envelope_asymptotic(ComplexOrder order, double x, int max_terms = 60);

/// True when nu is (numerically exactly) a real half-integer.
bool is_half_integer(cplx nu);

}  // namespace rzlab::specfun
