#include <cmath>
#include <random>

#include "doctest.h"
#include "rzlab/errors.hpp"
#include "rzlab/scattering.hpp"

using namespace rzlab;
using namespace rzlab::scattering;

namespace {

constexpr double kT1 = 14.134725141734693790;

// First ten ordinates (mpmath zetazero).
constexpr double kOrdinates[] = {14.134725141734693790, 21.022039638771554993, 25.010857580145688763,
                                 30.424876125859513210, 32.935061587739189691, 37.586178158825671257,
                                 40.918719012147495187, 43.327073280914999519, 48.005150881167159728,
                                 49.773832477672302182};

}  // namespace

TEST_CASE("s_matrix: trivial values and unitarity") {
  const auto at_zero = s_matrix(ComplexArgument(0.0, 0.0));
  CHECK(std::abs(at_zero.value.to_complex() - 1.0) < 1e-15);
  CHECK(std::abs(s_matrix(ComplexArgument(0.0, 3.0)).value.modulus() - 1.0) < 1e-10);
  for (double tau = 0.0; tau <= 50.0; tau += 0.1) {
    const auto v = s_matrix(ComplexArgument(0.0, tau));
    CHECK(std::abs(v.value.modulus() - 1.0) < 1e-8);
    CHECK_FALSE(v.pole_flag);
    CHECK_FALSE(v.zero_flag);
  }
}

TEST_CASE("s_matrix: pole and zero flags at the first zero") {
  const auto pole = s_matrix(ComplexArgument(-0.25, -7.0673626));
  CHECK(pole.pole_flag);
  CHECK_FALSE(pole.zero_flag);

  const auto f = jost_plus(ComplexArgument(-0.25, 7.0673626));
  CHECK(f.zero_flag);
  CHECK_FALSE(f.pole_flag);
  CHECK(f.value.modulus() < 1e-6);

  // Far from zeros at large height |xi| is tiny, yet no flag is raised.
  const auto high = s_matrix(ComplexArgument(-0.25, 60.0));
  CHECK_FALSE(high.pole_flag);
  CHECK_FALSE(high.zero_flag);
}

TEST_CASE("s_matrix: inversion, reflection and F+ S = 1") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> re(-1.5, 1.5);
  std::uniform_real_distribution<double> im(-60.0, 60.0);
  for (int i = 0; i < 50; ++i) {
    const cplx z(re(rng), im(rng));
    const auto a = s_matrix(ComplexArgument(z));
    const auto b = s_matrix(ComplexArgument(-z));
    CHECK(std::abs((a.value * b.value).to_complex() - 1.0) < 1e-10);
    const auto f = jost_plus(ComplexArgument(z));
    CHECK(std::abs((a.value * f.value).to_complex() - 1.0) < 1e-12);
    // S(s) = xi(1 - 2s) / xi(-2s)
    const cplx reflected = zeta::log_xi(ComplexArgument(1.0 - 2.0 * z)) - zeta::log_xi(ComplexArgument(-2.0 * z));
    const cplx direct(a.value.log_modulus, a.value.phase);
    CHECK(std::abs(std::exp(reflected - direct) - 1.0) < 1e-9);
  }
}

TEST_CASE("zero_to_jost_zero: first ten zeros") {
  const auto first = zero_to_jost_zero(kT1);
  CHECK(first.sigma == -0.25);
  CHECK(std::abs(first.t - 7.0673626) < 1e-7);
  // map back: -2 s = 1/2 - i t
  CHECK(std::abs(-2.0 * first.value() - cplx(0.5, -kT1)) < 1e-15);
  for (double t : kOrdinates) {
    const auto check = check_jost_zero(t);
    CHECK(check.passed);
    CHECK(check.winding == 1);
    CHECK(check.jost_modulus < 1e-6);
  }
  CHECK_THROWS_AS(zero_to_jost_zero(15.0), VerificationError);
}

TEST_CASE("jost_plus_winding: no zero away from the line") {
  CHECK(jost_plus_winding(numerics::ContourRectangle(-0.2, -0.1, 7.0, 7.2)) == 0);
  CHECK(jost_plus_winding(numerics::ContourRectangle(-0.3, -0.2, 5.0, 16.0)) == 4);  // t in [10, 32]
}

TEST_CASE("coupling_at_zero") {
  const auto c = coupling_at_zero(kT1);
  CHECK(c.lambda.imag() == 0.0);
  CHECK(std::abs(c.lambda.real() + 200.0405) < 1e-4);
  CHECK(c.lambda.real() < -0.25);
  const cplx rho(0.5, kT1);
  CHECK(std::abs(coupling_from_exponent(rho).lambda - c.lambda) < 1e-12);
  // Off the line the coupling is complex: Im = t (2 sigma - 1).
  const auto off = coupling_from_exponent(cplx(0.6, 10.0));
  CHECK(std::abs(off.lambda.imag() - 2.0) < 1e-12);
  // Real exponents outside [0, 1] give repulsive couplings.
  CHECK(coupling_from_exponent(2.0).lambda.real() > 0.0);
  CHECK(coupling_from_exponent(-1.0).lambda.real() > 0.0);
  CHECK_THROWS_AS(coupling_at_zero(0.0), DomainError);
}

TEST_CASE("flat_wave") {
  for (double y : {0.5, 1.0, 3.0}) {
    CHECK(std::abs(flat_wave(ComplexArgument(0.0, 0.0), y) - 2.0 * std::sqrt(y)) < 1e-14);
  }
  const ComplexArgument s(0.3, 2.0);
  const cplx S = s_matrix(s).value.to_complex();
  CHECK(std::abs(flat_wave(s, 1.0) - (1.0 + S)) < 1e-14);
  for (double y : {1.0, 2.0, 4.0}) {
    CHECK(flat_wave_ode_residual(ComplexArgument(0.0, 0.2), y) < 1e-6);
    CHECK(flat_wave_ode_residual(s, y) < 1e-6);
  }
  CHECK_THROWS_AS(flat_wave(s, 0.0), DomainError);
}
