#include "rzlab/hadamard.hpp"

#include <cmath>
#include <numbers>

#include "rzlab/errors.hpp"
#include "rzlab/zeta.hpp"

namespace rzlab::hadamard {

ZeroCatalog::ZeroCatalog(std::vector<double> ordinates) : ordinates_(std::move(ordinates)) {
  for (std::size_t i = 0; i < ordinates_.size(); ++i) {
    if (!(ordinates_[i] > 0.0)) throw PreconditionError("ZeroCatalog: ordinates must be positive");
    if (i > 0 && !(ordinates_[i] > ordinates_[i - 1]))
      throw PreconditionError("ZeroCatalog: ordinates must be increasing");
  }
}

ZeroCatalog ZeroCatalog::from_zeros(const std::vector<zeros::ZetaZero>& found) {
  std::vector<double> t;
  t.reserve(found.size());
  for (const auto& z : found) t.push_back(z.ordinate);
  return ZeroCatalog(std::move(t));
}

ZeroCatalog ZeroCatalog::first(std::size_t count, int jobs) {
  // Riemann-von Mangoldt: N(T) ~ (T / 2 pi) log(T / 2 pi e) + 7/8.
  auto estimate = [](double t) {
    const double x = t / (2.0 * std::numbers::pi);
    return x * std::log(x / std::numbers::e) + 0.875;
  };
  double height = 20.0;
  while (height < zeros::kMaxOrdinate && estimate(height) < static_cast<double>(count) + 2.0) height += 5.0;
  height = std::min(height, zeros::kMaxOrdinate);
  auto found = zeros::find_zeros(0.0, height, 0.1, 1e-12, jobs);
  if (found.size() < count)
    throw RangeError("ZeroCatalog::first: only " + std::to_string(found.size()) + " zeros below t = " +
                     std::to_string(height));
  found.resize(count);
  return from_zeros(found);
}

HadamardParams fit_constants(const std::function<cplx(cplx)>& log_eval) {
  constexpr double h = 1e-5;
  // log_eval may sit on different branches on either side of 0.
  auto central = [&](double step) {
    const cplx diff = log_eval(cplx(step)) - log_eval(cplx(-step));
    return cplx(diff.real(), zeta::normalize_phase(diff.imag())) / (2.0 * step);
  };
  HadamardParams p;
  p.m = 0;
  p.A = log_eval(0.0);
  p.B = (4.0 * central(0.5 * h) - central(h)) / 3.0;
  return p;
}

HadamardParams fit_constants() {
  return fit_constants([](cplx z) { return zeta::log_xi(zeta::ComplexArgument(z)); });
}

cplx hadamard_partial(const HadamardParams& params, const ZeroCatalog& catalog, cplx z, std::size_t n) {
  if (n > catalog.size()) throw PreconditionError("hadamard_partial: N exceeds the catalog size");
  if (params.m > 0 && z == cplx(0.0)) return 0.0;
  cplx log_product = params.A + params.B * z;
  if (params.m > 0) log_product += static_cast<double>(params.m) * std::log(z);
  const cplx shifted = z - 0.5;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = catalog.ordinates()[i];
    if (shifted == cplx(0.0, t) || shifted == cplx(0.0, -t)) return 0.0;
    // (1 - z/rho)(1 - z/conj rho) = ((z - 1/2)^2 + t^2) / |rho|^2,  1/rho + 1/conj rho = 1 / |rho|^2
    const double norm = 0.25 + t * t;
    log_product += std::log((shifted * shifted + t * t) / norm) + z / norm;
  }
  return std::exp(log_product);
}

std::vector<double> convergence_profile(const HadamardParams& params, const ZeroCatalog& catalog, cplx z,
                                        const std::vector<std::size_t>& counts) {
  const cplx log_direct = zeta::log_xi(zeta::ComplexArgument(z));
  std::vector<double> out;
  out.reserve(counts.size());
  for (std::size_t n : counts) {
    if (n > catalog.size()) throw PreconditionError("convergence_profile: N exceeds the catalog size");
    // Same log sum as hadamard_partial, compared in log space.
    cplx log_product = params.A + params.B * z;
    const cplx shifted = z - 0.5;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = catalog.ordinates()[i];
      const double norm = 0.25 + t * t;
      log_product += std::log((shifted * shifted + t * t) / norm) + z / norm;
    }
    out.push_back(std::abs(std::exp(log_product - log_direct) - 1.0));
  }
  return out;
}

}  // namespace rzlab::hadamard
