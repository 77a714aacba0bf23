#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "rzlab/numerics.hpp"

using namespace rzlab;
using namespace rzlab::numerics;
using std::numbers::pi;

TEST_CASE("integrate_adaptive: closed forms") {
  auto r = integrate_adaptive([](double x) { return cplx(x * x); }, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-14);
  CHECK(r.evaluations >= 1);
  CHECK(r.error_estimate >= 0.0);

  r = integrate_adaptive([](double x) { return cplx(std::sin(x)); }, 0.0, pi, 1e-12);
  CHECK(std::abs(r.value - 2.0) < 1e-13);
}

TEST_CASE("integrate_adaptive: y K_{1/2}(y)^2 against its antiderivative") {
  // K_{1/2}(y) = sqrt(pi / (2y)) e^{-y}, so y K^2 = (pi/2) e^{-2y}.
  auto integrand = [](double y) {
    const double k = std::sqrt(pi / (2.0 * y)) * std::exp(-y);
    return cplx(y * k * k);
  };
  const double exact = pi / 4.0 * (1.0 - std::exp(-2.0));
  const auto r = integrate_adaptive(integrand, 0.0, 1.0, 1e-12);
  CHECK(std::abs(r.value - exact) < 1e-12);
}

TEST_CASE("integrate_adaptive: error estimate bounds the error on polynomials") {
  std::mt19937_64 rng(20241018);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::uniform_real_distribution<double> end(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = trial % 11;
    std::vector<double> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = coef(rng);
    double a = end(rng);
    double b = end(rng);
    if (a == b) continue;
    auto poly = [&](double x) {
      double acc = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
      return cplx(acc);
    };
    auto anti = [&](double x) {
      double acc = 0.0;
      for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k] / static_cast<double>(k + 1);
      return acc * x;
    };
    const double tol = 1e-10;
    const auto r = integrate_adaptive(poly, a, b, tol);
    const double actual = std::abs(r.value.real() - (anti(b) - anti(a)));
    // The antiderivative oracle itself carries rounding of this size.
    double scale = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) scale += std::abs(c[k]) * std::pow(2.0, static_cast<double>(k + 1));
    const double oracle_rounding = 64.0 * std::numeric_limits<double>::epsilon() * scale;
    CHECK(actual <= std::max(tol, r.error_estimate));
    CHECK(r.error_estimate + oracle_rounding >= actual);
  }
}

TEST_CASE("integrate_adaptive: budget exhaustion carries the best estimate") {
  auto rough = [](double x) { return cplx(std::sqrt(std::abs(x - 0.3))); };
  try {
    (void)integrate_adaptive(rough, 0.0, 1.0, 1e-15, 100);
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    const double exact = (2.0 / 3.0) * (std::pow(0.3, 1.5) + std::pow(0.7, 1.5));
    CHECK(std::abs(e.best_estimate().value.real() - exact) < 1e-3);
    CHECK(e.best_estimate().evaluations <= 100);
  }
  CHECK_THROWS_AS(integrate_adaptive(rough, 0.0, 1.0, -1.0), PreconditionError);
}

TEST_CASE("integrate_semi_infinite: exponential integrands") {
  auto r = integrate_semi_infinite([](double x) { return cplx(std::exp(-x)); }, 0.0, 1e-12);
  CHECK(std::abs(r.value - 1.0) < 1e-12);
  CHECK(r.error_estimate <= 1e-12);

  r = integrate_semi_infinite([](double y) { return cplx(0.5 * pi * std::exp(-2.0 * y)); }, 0.0, 1e-12);
  CHECK(std::abs(r.value - pi / 4.0) < 1e-12);

  for (double alpha : {0.5, 1.0, 2.0}) {
    r = integrate_semi_infinite([alpha](double x) { return cplx(std::exp(-alpha * x)); }, 0.0, 1e-12);
    CHECK(std::abs(r.value - 1.0 / alpha) < 1e-12);
  }
}

TEST_CASE("integrate_semi_infinite: y K_0(y)^2 integrates to 1/2") {
  // Independent K_0 from Boost.Math.
  auto integrand = [](double y) {
    const double k = boost::math::cyl_bessel_k(0.0, y);
    return cplx(y * k * k);
  };
  const auto r = integrate_semi_infinite(integrand, 0.0, 1e-11);
  CHECK(std::abs(r.value - 0.5) < 1e-10);
}

TEST_CASE("integrate_semi_infinite: non-decaying tails are rejected") {
  CHECK_THROWS_AS(integrate_semi_infinite([](double x) { return cplx(1.0 / (1.0 + x)); }, 0.0, 1e-8),
                  DivergenceError);
  CHECK_THROWS_AS(integrate_semi_infinite([](double) { return cplx(1.0); }, 0.0, 1e-8),
                  DivergenceError);
}

TEST_CASE("principal_value_integral: examples") {
  auto one = [](double) { return cplx(1.0); };
  CHECK(std::abs(principal_value_integral(one, 0.0, -1.0, 1.0, 1e-12)) < 1e-14);
  auto identity = [](double x) { return cplx(x); };
  CHECK(std::abs(principal_value_integral(identity, 0.0, -1.0, 1.0, 1e-12) - 2.0) < 1e-13);

  // Brute-force oracle: symmetric midpoint grid on the folded integrand.
  const int m = 200000;
  const double h = 2.0 / m;
  double oracle = 0.0;
  for (int j = 0; j < m; ++j) {
    const double x = (j + 0.5) * h;
    oracle += h * (std::exp(x) - std::exp(-x)) / x;
  }
  auto expo = [](double x) { return cplx(std::exp(x)); };
  CHECK(std::abs(principal_value_integral(expo, 0.0, -2.0, 2.0, 1e-12) - oracle) < 1e-6);

  CHECK_THROWS_AS(principal_value_integral(one, 2.0, -1.0, 1.0, 1e-10), DomainError);
  CHECK_THROWS_AS(principal_value_integral(one, -1.0, -1.0, 1.0, 1e-10), DomainError);
}

TEST_CASE("principal_value_integral: odd integrands about c vanish") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const double c = 3.0 * u(rng);
    const double half = 0.5 + 2.0 * std::abs(u(rng));
    const double p = u(rng);
    const double q = u(rng);
    // f even about c makes f(x)/(x-c) odd about c.
    auto f = [=](double x) {
      const double d = x - c;
      return cplx(std::cos(p * d) + q * d * d, std::exp(-d * d));
    };
    CHECK(std::abs(principal_value_integral(f, c, c - half, c + half, 1e-12)) < 1e-12);
  }
}

TEST_CASE("principal_value_sampled agrees with the function-based version") {
  std::vector<double> nodes;
  std::vector<cplx> values;
  const int n = 2001;
  for (int i = 0; i < n; ++i) {
    const double x = -5.0 + 10.0 * i / (n - 1);
    nodes.push_back(x);
    values.push_back(cplx(std::exp(-x * x), std::sin(x) / (1.0 + x * x)));
  }
  auto f = [](double x) { return cplx(std::exp(-x * x), std::sin(x) / (1.0 + x * x)); };
  for (double c : {0.0, 0.3, -1.7, 2.0025, 4.5}) {
    const cplx sampled = principal_value_sampled(nodes, values, c);
    const cplx direct = principal_value_integral(f, c, -5.0, 5.0, 1e-12);
    CHECK(std::abs(sampled - direct) < 1e-7);
  }
  CHECK_THROWS_AS(principal_value_sampled(nodes, values, 5.0), DomainError);
}

TEST_CASE("find_root_bracketed: examples and errors") {
  const double r2 = find_root_bracketed([](double x) { return x * x - 2.0; }, {1.0, 2.0}, 1e-14);
  CHECK(std::abs(r2 - std::sqrt(2.0)) < 1e-14);
  const double half_pi = find_root_bracketed([](double x) { return std::cos(x); }, {1.0, 2.0}, 1e-14);
  CHECK(std::abs(half_pi - pi / 2.0) < 1e-14);
  CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1.0; }, {1.0, 2.0}, 1e-10),
                  PreconditionError);
  CHECK_THROWS_AS(BracketInterval(2.0, 1.0), PreconditionError);
}

TEST_CASE("winding_number: polynomials and orientation") {
  const ContourRectangle square(-0.5, 0.5, -0.5, 0.5);
  CHECK(winding_number([](cplx z) { return z; }, square) == 1);
  CHECK(winding_number([](cplx z) { return z * z; }, square) == 2);
  CHECK(winding_number([](cplx z) { return std::conj(z); }, square) == -1);
  CHECK(winding_number([](cplx z) { return 1.0 / z; }, square) == -1);
  CHECK(winding_number([](cplx z) { return z - 3.0; }, square) == 0);
  // Zero 1e-6 inside the contour: coarse sampling aliases, refinement does not.
  CHECK(winding_number([](cplx z) { return z - cplx(0.0, 0.5 - 1e-6); }, square, 4) == 1);
  CHECK(winding_number([](cplx z) { return z - cplx(0.0, 0.5 + 1e-6); }, square, 4) == 0);
  CHECK_THROWS_AS(winding_number([](cplx z) { return z - cplx(0.5, 0.0); }, square),
                  BoundaryZeroError);
  CHECK_THROWS_AS(ContourRectangle(1.0, 0.0, 0.0, 1.0), PreconditionError);
}

TEST_CASE("winding_number: random root sets") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const ContourRectangle rect(-1.0, 1.0, -1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> roots;
    int inside = 0;
    for (int k = 0; k < 5; ++k) {
      cplx r(u(rng), u(rng));
      if (std::abs(std::abs(r.real()) - 1.0) < 1e-3 || std::abs(std::abs(r.imag()) - 1.0) < 1e-3) continue;
      roots.push_back(r);
      if (std::abs(r.real()) < 1.0 && std::abs(r.imag()) < 1.0) ++inside;
    }
    auto g = [&](cplx z) {
      cplx p = 1.0;
      for (const auto& r : roots) p *= z - r;
      return p;
    };
    CHECK(winding_number(g, rect) == inside);
    CHECK(winding_number([&](cplx z) { return std::conj(g(z)); }, rect) == -inside);
  }
}
