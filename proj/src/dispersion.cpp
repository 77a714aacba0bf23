#include "rzlab/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "rzlab/errors.hpp"
#include "rzlab/numerics.hpp"
#include "rzlab/parallel.hpp"

namespace rzlab::dispersion {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

}  // namespace

BlaschkeSpec::BlaschkeSpec(std::vector<double> momenta) : bound_state_momenta(std::move(momenta)) {
  for (double k : bound_state_momenta) {
    if (!(k > 0.0)) throw DomainError("BlaschkeSpec: bound-state momenta must be positive");
  }
}

cplx blaschke_product(const BlaschkeSpec& spec, double k, Branch sign) {
  const double s = sign == Branch::plus ? 1.0 : -1.0;
  cplx product = 1.0;
  for (double kj : spec.bound_state_momenta) product *= (k - s * kI * kj) / (k + s * kI * kj);
  return product;
}

RealLineSamples::RealLineSamples(std::vector<double> grid_, std::vector<cplx> s_values_)
    : grid(std::move(grid_)), s_values(std::move(s_values_)) {
  const std::size_t n = grid.size();
  if (n != s_values.size() || n < 5) throw PreconditionError("RealLineSamples: need >= 5 matching samples");
  const double width = grid.back() - grid.front();
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n && !(grid[i + 1] > grid[i])) throw PreconditionError("RealLineSamples: grid not increasing");
    if (std::abs(grid[i] + grid[n - 1 - i]) > 1e-12 * width)
      throw PreconditionError("RealLineSamples: grid not symmetric about 0");
  }
}

std::vector<double> uniform_grid(double half_width, std::size_t nodes) {
  if (!(half_width > 0.0) || nodes < 5 || nodes % 2 == 0)
    throw PreconditionError("uniform_grid: need half_width > 0 and an odd node count >= 5");
  std::vector<double> grid(nodes);
  const std::size_t mid = nodes / 2;
  const double h = half_width / static_cast<double>(mid);
  for (std::size_t i = 0; i < nodes; ++i) {
    // mirror exactly about the centre node
    const double offset = h * static_cast<double>(i > mid ? i - mid : mid - i);
    grid[i] = i < mid ? -offset : offset;
  }
  return grid;
}

std::vector<cplx> log_integrand(const RealLineSamples& samples, const BlaschkeSpec& spec) {
  const std::size_t n = samples.grid.size();
  std::vector<cplx> out(n);
  double phase = 0.0;
  cplx previous = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx s = samples.s_values[i];
    if (!(std::abs(s) >= kNonvanishingFloor))
      throw NonvanishingViolation("dispersion: |S(k)| below the floor at k = " + std::to_string(samples.grid[i]));
    const cplx minus = blaschke_product(spec, samples.grid[i], Branch::minus);
    const cplx w = minus * minus / s;
    if (i == 0) {
      phase = std::arg(w);
    } else {
      const double step = std::arg(w / previous);
      if (std::abs(step) > kMaxPhaseStep)
        throw GridError("dispersion: grid too coarse, phase jumps by " + std::to_string(step) + " near k = " +
                        std::to_string(samples.grid[i]));
      phase += step;
    }
    previous = w;
    out[i] = cplx(std::log(std::abs(w)), phase);
  }
  if (std::abs(out.front()) >= kEndpointTolerance || std::abs(out.back()) >= kEndpointTolerance)
    throw GridError("dispersion: grid too narrow, |ln(S^-1 P-^2)| at the ends is " +
                    std::to_string(std::max(std::abs(out.front()), std::abs(out.back()))));
  return out;
}

namespace {

// exponent (1/2 pi i) PV int phi / (k' - k) and phi(k) at k.
struct Exponent {
  cplx pv_part;
  cplx half_log;
};

Exponent exponent_at(std::span<const double> grid, std::span<const cplx> phi, double k) {
  const cplx pv = numerics::principal_value_sampled(grid, phi, k);
  return {pv / (2.0 * kPi * kI), 0.5 * numerics::interpolate_sampled(grid, phi, k)};
}

}  // namespace

cplx reconstruct_jost_plus(const RealLineSamples& samples, const BlaschkeSpec& spec, double k) {
  const auto phi = log_integrand(samples, spec);
  const auto e = exponent_at(samples.grid, phi, k);
  return blaschke_product(spec, k, Branch::plus) * std::exp(e.pv_part + e.half_log);
}

std::vector<JostPair> reconstruct_on_grid(const RealLineSamples& samples, const BlaschkeSpec& spec, int jobs) {
  const auto phi = log_integrand(samples, spec);
  const std::size_t n = samples.grid.size();
  std::vector<JostPair> out(n - 2);
  parallel_for(n - 2, resolve_jobs(jobs), [&](std::size_t j) {
    const std::size_t i = j + 1;
    const double k = samples.grid[i];
    const cplx pv = numerics::principal_value_sampled(samples.grid, phi, k) / (2.0 * kPi * kI);
    const cplx half = 0.5 * phi[i];
    out[j].plus = blaschke_product(spec, k, Branch::plus) * std::exp(pv + half);
    out[j].minus = blaschke_product(spec, k, Branch::minus) * std::exp(pv - half);
  });
  return out;
}

double roundtrip_residual(const RealLineSamples& samples, const BlaschkeSpec& spec, int jobs) {
  jobs = resolve_jobs(jobs);
  const auto pairs = reconstruct_on_grid(samples, spec, jobs);
  const std::size_t m = pairs.size();
  const std::span<const double> inner(samples.grid.data() + 1, m);

  std::vector<cplx> g_plus(m);
  std::vector<cplx> g_minus(m);
  for (std::size_t j = 0; j < m; ++j) {
    g_plus[j] = pairs[j].plus / blaschke_product(spec, inner[j], Branch::plus) - 1.0;
    g_minus[j] = pairs[j].minus / blaschke_product(spec, inner[j], Branch::minus) - 1.0;
  }

  const double limit = samples.grid.back() / 3.0;
  std::vector<double> worst(m, 0.0);
  parallel_for(m, jobs, [&](std::size_t j) {
    const double k = inner[j];
    if (std::abs(k) > limit) return;
    const cplx hilbert_plus = numerics::principal_value_sampled(inner, g_plus, k) / (kPi * kI);
    const cplx hilbert_minus = numerics::principal_value_sampled(inner, g_minus, k) / (kPi * kI);
    const cplx plus = blaschke_product(spec, k, Branch::plus) * (1.0 + hilbert_plus);
    const cplx minus = blaschke_product(spec, k, Branch::minus) * (1.0 - hilbert_minus);
    worst[j] = std::abs(samples.s_values[j + 1] - minus / plus);
  });
  return *std::max_element(worst.begin(), worst.end());
}

cplx RationalModel::s_matrix(double k) const {
  const cplx minus = blaschke_product(bound_states, k, Branch::minus);
  return (k - kI * alpha) * (k + kI * beta) / ((k + kI * alpha) * (k - kI * beta)) * minus * minus;
}

cplx RationalModel::jost_plus(double k) const {
  return blaschke_product(bound_states, k, Branch::plus) * (k + kI * alpha) / (k + kI * beta);
}

RealLineSamples RationalModel::sample(double half_width, std::size_t nodes) const {
  return sample_on_grid([this](double k) { return s_matrix(k); }, half_width, nodes);
}

ZeroEnergyJost zero_energy_jost(const scattering::SMatrixValue& s) {
  return {s.value.reciprocal(), zeta::SignedLogComplex::from_complex(1.0)};
}

}  // namespace rzlab::dispersion
