#include "rzlab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "rzlab/errors.hpp"
#include "rzlab/numerics.hpp"

namespace rzlab::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

// B_{2k} / (2k (2k-1)) for k = 1..8.
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,        -1.0 / 360.0,       1.0 / 1260.0,         -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0,  1.0 / 156.0,          -3617.0 / 122400.0};

cplx stirling(cplx z) {
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx series = 0.0;
  cplx power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

bool is_integer(cplx nu, double tol) {
  return std::abs(nu.imag()) <= tol && std::abs(nu.real() - std::round(nu.real())) <= tol;
}

cplx hankel1_combination(cplx nu, double x) {
  const cplx j_minus = bessel_j_series(-nu, x);
  const cplx j_plus = bessel_j_series(nu, x);
  return (j_minus - std::exp(-kI * nu * kPi) * j_plus) / (kI * std::sin(nu * kPi));
}

// Symmetric limit around an integer order. The average is even in eps, so
// Richardson extrapolation in eps^2 over a few levels removes the offset
// while keeping eps large enough to avoid amplifying rounding.
cplx hankel1_integer(cplx nu, double x) {
  constexpr double kStep = 0.02;
  constexpr int kLevels = 4;
  std::array<cplx, kLevels> table{};
  for (int j = 0; j < kLevels; ++j) {
    const double eps = kStep * std::ldexp(1.0, j);
    table[j] = 0.5 * (hankel1_combination(nu + eps, x) + hankel1_combination(nu - eps, x));
  }
  for (int order = 1; order < kLevels; ++order) {
    const double factor = std::ldexp(1.0, 2 * order);
    for (int j = 0; j + order < kLevels; ++j)
      table[j] = (factor * table[j] - table[j + 1]) / (factor - 1.0);
  }
  return table[0];
}

// sum_{m=0}^{n} i^m a_m(nu) / x^m for half-integer nu = n + 1/2 (n >= 0).
cplx half_integer_envelope(double nu, double x) {
  const int n = static_cast<int>(std::lround(std::abs(nu) - 0.5));
  const double four_nu2 = 4.0 * nu * nu;
  cplx sum = 1.0;
  cplx term = 1.0;
  for (int m = 1; m <= n; ++m) {
    const double odd = 2.0 * m - 1.0;
    term *= kI * (four_nu2 - odd * odd) / (8.0 * m * x);
    sum += term;
  }
  return sum;
}

void check_hankel_range(double x) {
  if (!(x > 0.0) || x > 30.0) throw RangeError("hankel1: x must lie in (0, 30]");
}

}  // namespace

ComplexOrder::ComplexOrder(cplx nu_) : nu(nu_) {
  if (!std::isfinite(nu.real()) || !std::isfinite(nu.imag()))
    throw DomainError("ComplexOrder: order must be finite");
}

cplx log_sin(cplx z) {
  if (z.imag() < 0.0) return std::conj(log_sin(std::conj(z)));
  if (z.imag() < 5.0) return std::log(std::sin(z));
  // sin z = exp(-iz) (1 - exp(2iz)) (i/2), |exp(2iz)| < exp(-10).
  return -kI * z + std::log(1.0 - std::exp(2.0 * kI * z)) + cplx(-std::log(2.0), 0.5 * kPi);
}

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real()))
    throw PoleError("log_gamma: pole at a nonpositive integer");
  if (z.real() < 0.5) return std::log(kPi) - log_sin(kPi * z) - log_gamma(1.0 - z);

  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

cplx bessel_k(ComplexOrder order, double y) {
  const cplx nu = order.nu;
  if (!(y > 0.0)) throw DomainError("bessel_k: argument must be positive");
  if (std::abs(nu.real()) > 5.0) throw RangeError("bessel_k: |Re nu| must not exceed 5");

  // exp(-y) * integral_0^inf exp(-y (cosh t - 1)) cosh(nu t) dt
  auto integrand = [&](double t) -> cplx {
    const double damp = -y * 2.0 * std::sinh(0.5 * t) * std::sinh(0.5 * t);
    return std::exp(damp) * std::cosh(nu * t);
  };
  const double scale = std::sqrt(kPi / (2.0 * y)) + std::pow(2.0 / y, std::abs(nu.real()));
  const auto result = numerics::integrate_semi_infinite(integrand, 0.0, 1e-15 * scale);
  return std::exp(-y) * result.value;
}

cplx bessel_j_series(cplx nu, double x) {
  if (!(x > 0.0)) throw DomainError("bessel_j_series: x must be positive");
  const double half = 0.5 * x;
  const double q = -half * half;
  // First term (x/2)^nu / Gamma(nu + 1); 1/Gamma vanishes at its poles.
  cplx term;
  const cplx arg = nu + 1.0;
  if (arg.imag() == 0.0 && arg.real() <= 0.0 && arg.real() == std::round(arg.real())) {
    // Integer negative order: leading terms vanish; J_{-n} = (-1)^n J_n.
    const int n = static_cast<int>(std::lround(-nu.real()));
    const cplx jn = bessel_j_series(cplx(n, 0.0), x);
    return (n % 2 == 0) ? jn : -jn;
  }
  term = std::exp(nu * std::log(half) - log_gamma(arg));
  cplx sum = term;
  double largest = std::abs(term);
  for (int m = 1; m < 500; ++m) {
    term *= q / (static_cast<double>(m) * (static_cast<double>(m) + nu));
    sum += term;
    largest = std::max(largest, std::abs(term));
    if (m > half && std::abs(term) < 1e-18 * largest) break;
  }
  return sum;
}

bool is_half_integer(cplx nu) {
  if (nu.imag() != 0.0) return false;
  const double twice = 2.0 * nu.real();
  return twice == std::round(twice) && std::fmod(std::abs(twice), 2.0) == 1.0;
}

namespace {

struct AsymptoticSum {
  cplx value;
  double smallest_term;
};

// sum_m i^m a_m(nu) / x^m, truncated before the terms start growing.
AsymptoticSum envelope_asymptotic(cplx nu, double x, int max_terms) {
  const cplx four_nu2 = 4.0 * nu * nu;
  cplx sum = 1.0;
  cplx term = 1.0;
  double previous = 1.0;
  for (int m = 1; m <= max_terms; ++m) {
    const double odd = 2.0 * m - 1.0;
    const cplx next = term * kI * (four_nu2 - odd * odd) / (8.0 * m * x);
    const double size = std::abs(next);
    if (size > previous) break;
    term = next;
    sum += term;
    previous = size;
    if (size < 1e-17) break;
  }
  return {sum, previous};
}

// Above this bound on the first omitted term the asymptotic series is
// accurate to double precision and avoids the cancellation of the J series.
constexpr double kAsymptoticAccuracy = 1e-15;

cplx phase_factor(cplx nu, double x) {
  return std::exp(kI * (x - 0.5 * nu * kPi - 0.25 * kPi));
}

}  // namespace

cplx hankel1_envelope(ComplexOrder order, double x) {
  check_hankel_range(x);
  const cplx nu = order.nu;
  if (is_half_integer(nu)) return half_integer_envelope(nu.real(), x);
  const auto asym = envelope_asymptotic(nu, x, 200);
  if (asym.smallest_term < kAsymptoticAccuracy) return asym.value;
  const cplx h = is_integer(nu, 1e-9) ? hankel1_integer(cplx(std::round(nu.real()), 0.0), x)
                                      : hankel1_combination(nu, x);
  return std::sqrt(0.5 * kPi * x) / phase_factor(nu, x) * h;
}

cplx hankel1(ComplexOrder order, double x) {
  check_hankel_range(x);
  const cplx nu = order.nu;
  if (is_half_integer(nu))
    return std::sqrt(2.0 / (kPi * x)) * phase_factor(nu, x) * half_integer_envelope(nu.real(), x);
  const auto asym = envelope_asymptotic(nu, x, 200);
  if (asym.smallest_term < kAsymptoticAccuracy)
    return std::sqrt(2.0 / (kPi * x)) * phase_factor(nu, x) * asym.value;
  if (is_integer(nu, 1e-9)) return hankel1_integer(cplx(std::round(nu.real()), 0.0), x);
  return hankel1_combination(nu, x);
}

cplx hankel1_envelope_asymptotic(ComplexOrder order, double x, int max_terms) {
  if (!(x > 0.0)) throw DomainError("hankel1_envelope_asymptotic: x must be positive");
  const cplx nu = order.nu;
  if (is_half_integer(nu)) return half_integer_envelope(nu.real(), x);
  return envelope_asymptotic(nu, x, max_terms).value;
}

}  // namespace rzlab::specfun
