#pragma once

// Riemann zeta and the completed xi function.
//
// zeta: Euler-Maclaurin summation for Re s >= 0, functional-equation
// reflection for Re s < 0. xi is carried in log form because
// |xi(1/2 + it)| decays like exp(-pi t / 4).

#include <complex>
#include <limits>

namespace rzlab::zeta {

using cplx = std::complex<double>;

/// Supported window: |Im s| <= kMaxHeight, Re s >= kMinSigma (and, for xi,
/// Re s <= 1 - kMinSigma).
inline constexpr double kMaxHeight = 300.0;
inline constexpr double kMinSigma = -10.0;

struct ComplexArgument {
  double sigma;
  double t;
  ComplexArgument(double sigma_, double t_);
  ComplexArgument(cplx s);  // NOLINT(google-explicit-constructor)
  cplx value() const { return {sigma, t}; }
};

/// w = exp(log_modulus + i phase), phase in (-pi, pi]. sign_hint is the sign
/// of Re w and is meaningful when w is known to be real.
struct SignedLogComplex {
  double log_modulus = -std::numeric_limits<double>::infinity();
  double phase = 0.0;
  int sign_hint = 1;

  static SignedLogComplex from_log(cplx log_value);
  static SignedLogComplex from_complex(cplx value);

  cplx to_complex() const;
  double modulus() const;
  bool is_zero() const;

  /// The real number sign_hint * exp(log_modulus); drops the imaginary part.
  double to_real() const;

  SignedLogComplex operator*(const SignedLogComplex& other) const;
  SignedLogComplex operator/(const SignedLogComplex& other) const;
  SignedLogComplex reciprocal() const;
};

double normalize_phase(double phase);

/// Riemann zeta. Throws PoleError at s = 1, RangeError outside the window.
cplx zeta(ComplexArgument s);

/// (s - 1) zeta(s), analytic at s = 1. Same window as zeta.
cplx zeta_times_s_minus_1(ComplexArgument s);

/// xi(s) = (1/2) s (s-1) pi^{-s/2} Gamma(s/2) zeta(s), entire.
SignedLogComplex xi(ComplexArgument s);

/// log xi(s) on an unspecified but fixed branch.
cplx log_xi(ComplexArgument s);

/// |xi(s) - xi(1-s)| / (|xi(s)| + |xi(1-s)|).
double xi_symmetry_residual(ComplexArgument s);

}  // namespace rzlab::zeta
