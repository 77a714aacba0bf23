#pragma once

// Scattering matrix S(s) = xi(2s) / xi(-2s) and the zero-energy Jost
// function F+(s) = xi(-2s) / xi(2s). The zeta zero rho = 1/2 - it gives the
// Jost zero s = -rho/2 = -1/4 + it/2.

#include "rzlab/numerics.hpp"
#include "rzlab/zeta.hpp"

namespace rzlab::scattering {

using cplx = std::complex<double>;
using zeta::ComplexArgument;
using zeta::SignedLogComplex;

/// Linear-scale floor on |xi| for zero and pole flags.
inline constexpr double kZeroFloor = 1e-9;
/// Largest Newton distance |xi / xi'| for which a small |xi| counts as a zero.
inline constexpr double kZeroDistance = 1e-6;

struct SMatrixValue {
  ComplexArgument s;
  SignedLogComplex value;
  bool pole_flag = false;  // denominator vanishes at s
  bool zero_flag = false;  // numerator vanishes at s
};

struct CouplingValue {
  cplx lambda;
};

/// True when xi has a zero at w to detection accuracy: |xi(w)| < kZeroFloor
/// and the Newton step |xi(w) / xi'(w)| is below kZeroDistance. The second
/// condition keeps the exponentially small values at large height from
/// being mistaken for zeros.
bool xi_vanishes_at(cplx w);

/// S(s) = xi(2s) / xi(-2s), computed from log xi.
SMatrixValue s_matrix(ComplexArgument s);

/// F+(s) = xi(-2s) / xi(2s) = 1 / S(s), flags swapped.
SMatrixValue jost_plus(ComplexArgument s);

/// Winding number of F+ around `rect`.
int jost_plus_winding(const numerics::ContourRectangle& rect);

struct JostZeroCheck {
  ComplexArgument point{0.0, 0.0};
  double jost_modulus = 0.0;  // |F+| at the point
  int winding = 0;            // F+ around a box of half-width kJostBox
  bool passed = false;
};

inline constexpr double kJostBox = 0.05;
inline constexpr double kJostTolerance = 1e-6;

/// Evaluates the correspondence at a zero ordinate without throwing.
JostZeroCheck check_jost_zero(double t_n);

/// s = -1/4 + i t_n / 2, after checking |F+| < 1e-6 there and that F+ winds
/// once around the surrounding box. Throws VerificationError otherwise.
ComplexArgument zero_to_jost_zero(double t_n);

/// lambda = rho (rho - 1) for rho = 1/2 + i t_n, i.e. -(1/4 + t_n^2) with a
/// zero imaginary part. Throws DomainError for t_n <= 0.
CouplingValue coupling_at_zero(double t_n);

/// lambda = rho (rho - 1) for an arbitrary exponent. Real and positive
/// (repulsive) for real rho > 1 or rho < 0; real and below -1/4 on the
/// critical line; complex off it.
CouplingValue coupling_from_exponent(cplx rho);

/// y^{1/2+s} + S(s) y^{1/2-s}. Throws DomainError for y <= 0 or at a pole of S.
cplx flat_wave(ComplexArgument s, double y);

/// |f'' + lambda0 f / y^2| / (|f''| + |lambda0 f / y^2|) with lambda0 = 1/4 - s^2,
/// f'' from a five-point stencil.
double flat_wave_ode_residual(ComplexArgument s, double y);

}  // namespace rzlab::scattering
