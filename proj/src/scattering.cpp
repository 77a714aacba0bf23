#include "rzlab/scattering.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "rzlab/errors.hpp"

namespace rzlab::scattering {

namespace {

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();

cplx log_xi_at(cplx w) { return zeta::log_xi(ComplexArgument(w)); }

SMatrixValue ratio(ComplexArgument s, cplx numerator_arg, cplx denominator_arg) {
  const cplx top = log_xi_at(numerator_arg);
  const cplx bottom = log_xi_at(denominator_arg);
  SMatrixValue out{s, SignedLogComplex::from_log(top - bottom), false, false};
  out.zero_flag = xi_vanishes_at(numerator_arg);
  out.pole_flag = !out.zero_flag && xi_vanishes_at(denominator_arg);
  return out;
}

}  // namespace

bool xi_vanishes_at(cplx w) {
  const cplx center = log_xi_at(w);
  if (std::exp(center.real()) >= kZeroFloor) return false;
  if (center.real() == kMinusInf) return true;
  // xi'(w) / |xi| scale from neighbouring values, all relative to exp(ref).
  constexpr double h = 1e-4;
  const cplx plus = log_xi_at(w + h);
  const cplx minus = log_xi_at(w - h);
  const double ref = plus.real();
  const cplx derivative = (std::exp(plus - ref) - std::exp(minus - ref)) / (2.0 * h);
  const double value = std::exp(center.real() - ref);
  return value < kZeroDistance * std::abs(derivative);
}

SMatrixValue s_matrix(ComplexArgument s) {
  const cplx z = s.value();
  return ratio(s, 2.0 * z, -2.0 * z);
}

SMatrixValue jost_plus(ComplexArgument s) {
  const cplx z = s.value();
  return ratio(s, -2.0 * z, 2.0 * z);
}

int jost_plus_winding(const numerics::ContourRectangle& rect) {
  auto g = [](cplx s) {
    const cplx log_f = log_xi_at(-2.0 * s) - log_xi_at(2.0 * s);
    if (log_f.real() == kMinusInf) return cplx(0.0);
    return std::polar(std::exp(log_f.real()), log_f.imag());
  };
  return numerics::winding_number(g, rect);
}

JostZeroCheck check_jost_zero(double t_n) {
  JostZeroCheck check;
  check.point = ComplexArgument(-0.25, 0.5 * t_n);
  check.jost_modulus = jost_plus(check.point).value.modulus();
  const double x = check.point.sigma;
  const double y = check.point.t;
  try {
    check.winding = jost_plus_winding(
        numerics::ContourRectangle(x - kJostBox, x + kJostBox, y - kJostBox, y + kJostBox));
  } catch (const BoundaryZeroError&) {
    check.winding = 0;
  }
  check.passed = check.jost_modulus < kJostTolerance && check.winding == 1;
  return check;
}

ComplexArgument zero_to_jost_zero(double t_n) {
  const auto check = check_jost_zero(t_n);
  if (!check.passed) {
    throw VerificationError("zero_to_jost_zero: correspondence violated at t = " + std::to_string(t_n) +
                            " (|F+| = " + std::to_string(check.jost_modulus) +
                            ", winding = " + std::to_string(check.winding) + ")");
  }
  return check.point;
}

CouplingValue coupling_at_zero(double t_n) {
  if (!(t_n > 0.0)) throw DomainError("coupling_at_zero: ordinate must be positive");
  return {cplx(-(0.25 + t_n * t_n), 0.0)};
}

CouplingValue coupling_from_exponent(cplx rho) { return {rho * (rho - 1.0)}; }

cplx flat_wave(ComplexArgument s, double y) {
  if (!(y > 0.0)) throw DomainError("flat_wave: y must be positive");
  const auto S = s_matrix(s);
  if (S.pole_flag) throw DomainError("flat_wave: S(s) has a pole");
  const cplx z = s.value();
  const double log_y = std::log(y);
  const cplx log_second = cplx(S.value.log_modulus, S.value.phase) + (0.5 - z) * log_y;
  return std::exp((0.5 + z) * log_y) + std::exp(log_second);
}

double flat_wave_ode_residual(ComplexArgument s, double y) {
  const double h = 1e-2 * y;
  const cplx f0 = flat_wave(s, y);
  const cplx second = (-flat_wave(s, y + 2.0 * h) + 16.0 * flat_wave(s, y + h) - 30.0 * f0 +
                       16.0 * flat_wave(s, y - h) - flat_wave(s, y - 2.0 * h)) /
                      (12.0 * h * h);
  const cplx z = s.value();
  const cplx potential_term = (0.25 - z * z) * f0 / (y * y);
  const double scale = std::abs(second) + std::abs(potential_term);
  if (scale == 0.0) return 0.0;
  return std::abs(second + potential_term) / scale;
}

}  // namespace rzlab::scattering
