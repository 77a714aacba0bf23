#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rzlab/errors.hpp"
#include "rzlab/hadamard.hpp"

using namespace rzlab;
using namespace rzlab::hadamard;

namespace {

const ZeroCatalog& catalog() {
  static const ZeroCatalog c = ZeroCatalog::first(100);
  return c;
}

}  // namespace

TEST_CASE("fit_constants") {
  const auto p = fit_constants();
  CHECK(p.m == 0);
  CHECK(std::abs(std::exp(p.A) - 0.5) < 1e-8);
  CHECK(std::abs(std::exp(p.A) - zeta::xi(zeta::ComplexArgument(1.0, 0.0)).to_complex()) < 1e-14);
  CHECK(p.B.imag() == doctest::Approx(0.0));
  // B = -gamma/2 - 1 + log(4 pi)/2 (not used by the code, which fits it).
  const double euler_gamma = 0.57721566490153286061;
  CHECK(std::abs(p.B.real() - (-0.5 * euler_gamma - 1.0 + 0.5 * std::log(4.0 * std::numbers::pi))) < 1e-8);

  // A quadratic log: A and B recovered exactly up to rounding.
  const auto q = fit_constants([](cplx z) { return cplx(0.3) + cplx(-1.2, 0.4) * z + 2.0 * z * z; });
  CHECK(std::abs(q.A - 0.3) < 1e-15);
  CHECK(std::abs(q.B - cplx(-1.2, 0.4)) < 1e-9);
}

TEST_CASE("ZeroCatalog") {
  CHECK(catalog().size() == 100);
  CHECK(std::abs(catalog().ordinates()[0] - 14.134725141734693790) < 1e-9);
  CHECK(std::abs(catalog().ordinates()[99] - 236.52422966581620580) < 1e-8);
  CHECK_THROWS_AS(ZeroCatalog({3.0, 2.0}), PreconditionError);
  CHECK_THROWS_AS(ZeroCatalog({-1.0}), PreconditionError);
}

TEST_CASE("hadamard_partial: structure") {
  const auto p = fit_constants();
  const cplx z(0.7, 3.1);
  CHECK(std::abs(hadamard_partial(p, catalog(), z, 0) - std::exp(p.A + p.B * z)) < 1e-15);
  const double t1 = catalog().ordinates()[0];
  CHECK(hadamard_partial(p, catalog(), cplx(0.5, t1), 1) == cplx(0.0));
  CHECK(hadamard_partial(p, catalog(), cplx(0.5, -t1), 50) == cplx(0.0));
  CHECK(hadamard_partial(p, catalog(), cplx(0.5, catalog().ordinates()[41]), 100) == cplx(0.0));
  CHECK(hadamard_partial(p, catalog(), cplx(0.5, catalog().ordinates()[41]), 41) != cplx(0.0));
  for (double x : {-3.0, 0.2, 2.0, 7.5}) {
    const cplx v = hadamard_partial(p, catalog(), x, 100);
    CHECK(std::abs(v.imag()) <= 1e-12 * std::abs(v));
  }
  const cplx w(1.3, -8.0);
  CHECK(std::abs(hadamard_partial(p, catalog(), std::conj(w), 60) -
                 std::conj(hadamard_partial(p, catalog(), w, 60))) < 1e-15);
  CHECK_THROWS_AS(hadamard_partial(p, catalog(), z, 101), PreconditionError);
}

TEST_CASE("hadamard_partial: independent product") {
  // Plain product of (1 - z/rho) e^{z/rho} over both members of each pair.
  const auto p = fit_constants();
  const cplx z(0.3, 4.0);
  cplx direct = std::exp(p.A + p.B * z);
  for (std::size_t i = 0; i < 30; ++i) {
    for (double sign : {1.0, -1.0}) {
      const cplx rho(0.5, sign * catalog().ordinates()[i]);
      direct *= (1.0 - z / rho) * std::exp(z / rho);
    }
  }
  const cplx ours = hadamard_partial(p, catalog(), z, 30);
  CHECK(std::abs(ours - direct) < 1e-12 * std::abs(direct));
}

TEST_CASE("convergence_profile") {
  const auto p = fit_constants();
  const auto at_two = convergence_profile(p, catalog(), 2.0, {10, 50, 100});
  CHECK(at_two[0] > at_two[1]);
  CHECK(at_two[1] > at_two[2]);
  for (double r : convergence_profile(p, catalog(), 0.0, {1, 10, 100})) CHECK(r == 0.0);

  // The tail sum over n > 100 of |z|^2 / t_n^2 is about 0.06 at z = 1/2 + 5i,
  // so the truncated product cannot get closer than that.
  const auto line = convergence_profile(p, catalog(), cplx(0.5, 5.0), {10, 50, 100});
  CHECK(line[0] > line[1]);
  CHECK(line[1] > line[2]);
  CHECK(line[2] < 0.1);

  // The functional equation is recovered only in the limit.
  const cplx z(2.0, 1.0);
  double previous = 1e300;
  for (std::size_t n : {1, 10, 100}) {
    const double gap = std::abs(hadamard_partial(p, catalog(), z, n) - hadamard_partial(p, catalog(), 1.0 - z, n));
    CHECK(gap < previous);
    previous = gap;
  }
}
