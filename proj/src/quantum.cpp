#include "rzlab/quantum.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "rzlab/errors.hpp"
#include "rzlab/specfun.hpp"

namespace rzlab::quantum {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

bool is_nonzero_integer(cplx nu) {
  return nu.imag() == 0.0 && nu.real() != 0.0 && nu.real() == std::round(nu.real());
}

void check_moment_order(cplx nu) {
  if (is_nonzero_integer(nu)) throw PoleError("k moment: nu is a nonzero integer");
  if (std::abs(nu.real()) >= 1.0) throw DivergenceError("k moment: |Re nu| >= 1, integral diverges at 0");
}

struct Envelope {
  cplx value;
  cplx derivative;  // d/dx
};

// sum_m i^m a_m(nu) x^-m and its x-derivative, truncated before the terms
// start to grow.
Envelope envelope_with_derivative(cplx nu, double x) {
  const cplx four_nu2 = 4.0 * nu * nu;
  Envelope e{1.0, 0.0};
  cplx term = 1.0;
  double previous = 1.0;
  for (int m = 1; m <= 200; ++m) {
    const double odd = 2.0 * m - 1.0;
    const cplx next = term * kI * (four_nu2 - odd * odd) / (8.0 * m * x);
    const double size = std::abs(next);
    if (size > previous) break;
    term = next;
    e.value += term;
    e.derivative -= static_cast<double>(m) * term / x;
    previous = size;
    if (size < 1e-17) break;
  }
  return e;
}

using State = std::array<cplx, 2>;

}  // namespace

OrderParameter OrderParameter::from_lambda(cplx lambda) {
  cplx nu = std::sqrt(lambda + 0.25);
  if (nu.real() == 0.0 && nu.imag() < 0.0) nu = -nu;
  if (nu.real() == 0.0) nu = cplx(0.0, nu.imag());  // drop a negative zero
  return {lambda, nu};
}

cplx coupling_from_s(cplx s) { return s * (s - 1.0); }

cplx potential(const PotentialSpec& spec, double y) {
  if (!(y > 0.0)) throw BarrierError("potential: infinite barrier for y <= 0");
  return spec.lambda / (y * y);
}

std::pair<cplx, cplx> zero_energy_solutions(cplx s, double y) {
  if (!(y > 0.0)) throw BarrierError("zero_energy_solutions: y must be positive");
  const double log_y = std::log(y);
  const cplx a = std::exp(s * log_y);
  const cplx b = std::exp((1.0 - s) * log_y);
  const cplx first = 0.5 * (a + b);
  const cplx twice_d = 2.0 * s - 1.0;
  if (std::abs(twice_d) >= 1e-4) return {first, (a - b) / twice_d};

  // y^{1/2} sinh(d L) / d with d = s - 1/2, L = log y: y^{1/2} L sum (dL)^{2n} / (2n+1)!
  const cplx x = 0.5 * twice_d * log_y;
  const cplx x2 = x * x;
  cplx term = 1.0;
  cplx sum = 1.0;
  for (int n = 1; n < 30 && std::abs(term) > 1e-18; ++n) {
    term *= x2 / static_cast<double>((2 * n) * (2 * n + 1));
    sum += term;
  }
  return {first, std::sqrt(y) * log_y * sum};
}

cplx jost_solution_analytic(double k, cplx nu, double y) {
  if (!(k > 0.0)) throw DomainError("jost_solution_analytic: k must be positive");
  if (!(y > 0.0)) throw BarrierError("jost_solution_analytic: y must be positive");
  return std::exp(kI * (k * y)) * specfun::hankel1_envelope(nu, k * y);
}

double asymptotic_residual(double k, cplx nu, double y) {
  if (!(k > 0.0)) throw DomainError("asymptotic_residual: k must be positive");
  if (!(y > 0.0)) throw BarrierError("asymptotic_residual: y must be positive");
  return std::abs(specfun::hankel1_envelope(nu, k * y) - 1.0);
}

double jost_ode_residual(double k, cplx nu, double y) {
  const double h = std::min(1e-2 * y, 1e-2 / k);
  auto f = [&](double t) { return jost_solution_analytic(k, nu, t); };
  const cplx f0 = f(y);
  const cplx second = (-f(y + 2.0 * h) + 16.0 * f(y + h) - 30.0 * f0 + 16.0 * f(y - h) - f(y - 2.0 * h)) /
                      (12.0 * h * h);
  const cplx rhs = ((nu * nu - 0.25) / (y * y) - k * k) * f0;
  return std::abs(second - rhs) / (std::abs(second) + std::abs(rhs));
}

double asymptotic_start_radius(double k, cplx lambda) {
  if (!(k > 0.0)) throw DomainError("asymptotic_start_radius: k must be positive");
  const cplx nu = OrderParameter::from_lambda(lambda).nu;
  const double first_term = std::abs(4.0 * nu * nu - 1.0) / 8.0;  // |a_1| / x
  return std::max(40.0, 2.0 * first_term / 1e-3) / k;
}

std::vector<JostSample> jost_solution_ode(double k, cplx lambda, double y_end, double y_start,
                                          const std::vector<double>& sample_at, double tol) {
  namespace odeint = boost::numeric::odeint;
  if (!(k > 0.0)) throw DomainError("jost_solution_ode: k must be positive");
  if (!(y_start > y_end)) throw PreconditionError("jost_solution_ode: need y_start > y_end");
  if (y_end < kMinRadius)
    throw IntegrationLimitError("jost_solution_ode: integration stops at y = 1e-3 (singular potential)");

  const cplx nu = OrderParameter::from_lambda(lambda).nu;
  const double x0 = k * y_start;
  const Envelope e = envelope_with_derivative(nu, x0);
  if (!(std::abs(e.value - 1.0) < 1e-3))
    throw PreconditionError("jost_solution_ode: k * y_start is not in the asymptotic region");
  const cplx phase = std::exp(kI * x0);
  State state{phase * e.value, k * phase * (kI * e.value + e.derivative)};

  auto rhs = [&](const State& f, State& df, double y) {
    df[0] = f[1];
    df[1] = (lambda / (y * y) - k * k) * f[0];
  };

  std::vector<JostSample> out;
  auto observer = [&](const State& f, double y) { out.push_back({y, f[0], f[1]}); };
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>());
  const double dt0 = -std::min(0.01 / k, 0.01 * y_end);

  try {
    if (sample_at.empty()) {
      odeint::integrate_adaptive(stepper, rhs, state, y_start, y_end, dt0, observer);
    } else {
      std::vector<double> times{y_start};
      for (double y : sample_at) {
        if (y < y_end || y > y_start) throw PreconditionError("jost_solution_ode: sample outside range");
        times.push_back(y);
      }
      std::sort(times.begin() + 1, times.end(), std::greater<>());
      odeint::integrate_times(stepper, rhs, state, times.begin(), times.end(), dt0, observer);
      out.erase(out.begin());  // the starting point
      // restore the caller's order
      std::vector<JostSample> ordered;
      ordered.reserve(sample_at.size());
      for (double y : sample_at) {
        const auto it = std::find_if(out.begin(), out.end(), [y](const JostSample& s) { return s.y == y; });
        ordered.push_back(*it);
      }
      return ordered;
    }
  } catch (const odeint::odeint_error& err) {
    throw IntegrationLimitError(std::string("jost_solution_ode: ") + err.what());
  }
  return out;
}

numerics::QuadratureResult k_moment_integral(cplx nu) {
  check_moment_order(nu);
  auto integrand = [nu](double y) {
    if (y == 0.0) return cplx(0.0);
    const cplx kv = specfun::bessel_k(nu, y);
    return y * kv * kv;
  };
  return numerics::integrate_semi_infinite(integrand, 0.0, 1e-12);
}

numerics::QuadratureResult k_norm_integral(cplx nu) {
  check_moment_order(nu);
  auto integrand = [nu](double y) {
    if (y == 0.0) return cplx(0.0);
    return cplx(y * std::norm(specfun::bessel_k(nu, y)));
  };
  return numerics::integrate_semi_infinite(integrand, 0.0, 1e-12);
}

cplx k_moment_closed_form(cplx nu, double coefficient) {
  if (is_nonzero_integer(nu)) throw PoleError("k_moment_closed_form: nu is a nonzero integer");
  if (nu == cplx(0.0)) return coefficient;
  return coefficient * kPi * nu / std::sin(kPi * nu);
}

double fitted_moment_coefficient() {
  const double half_pi_over_sin = kPi * 0.5 / std::sin(kPi * 0.5);
  return k_moment_integral(0.5).value.real() / half_pi_over_sin;
}

double khuri_reality_residual(cplx lambda, double tau) {
  if (!(tau > 0.0)) throw DomainError("khuri_reality_residual: tau must be positive");
  const cplx nu = OrderParameter::from_lambda(lambda).nu;
  const double norm = k_norm_integral(nu).value.real();
  if (!std::isfinite(norm)) throw DivergenceError("khuri_reality_residual: normalization not finite");
  return std::abs(lambda.imag() * (2.0 / kPi) * (1.0 / tau) * norm);
}

}  // namespace rzlab::quantum
