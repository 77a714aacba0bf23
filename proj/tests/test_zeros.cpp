#include <cmath>

#include "doctest.h"
#include "rzlab/errors.hpp"
#include "rzlab/zeros.hpp"

using namespace rzlab;
using namespace rzlab::zeros;

namespace {

// Plain bisection on the sign of xi(1/2 + it), independent of Brent.
double bisect(double lo, double hi) {
  double f_lo = scaled_critical_line_function(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = scaled_critical_line_function(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("critical_line_function: signs and symmetry") {
  CHECK(critical_line_function(0.0).sign_hint == 1);
  CHECK(critical_line_function(14.0).sign_hint != critical_line_function(14.2).sign_hint);
  const auto a = critical_line_function(23.7);
  const auto b = critical_line_function(-23.7);
  CHECK(a.log_modulus == b.log_modulus);
  CHECK(a.sign_hint == b.sign_hint);
  CHECK((a.phase == 0.0 || a.phase == doctest::Approx(3.141592653589793)));
}

TEST_CASE("find_zeros: first zeros") {
  const auto zs = find_zeros(0.0, 30.0, 0.1, 1e-10);
  REQUIRE(zs.size() == 3);
  // mpmath: zetazero(1..3)
  CHECK(std::abs(zs[0].ordinate - 14.134725141734693790) < 1e-9);
  CHECK(std::abs(zs[1].ordinate - 21.022039638771554993) < 1e-9);
  CHECK(std::abs(zs[2].ordinate - 25.010857580145688763) < 1e-9);
  for (int k = 0; k < 3; ++k) {
    CHECK(zs[k].index == k + 1);
    CHECK(std::abs(zeta::zeta(zeta::ComplexArgument(0.5, zs[k].ordinate))) < 1e-8);
    CHECK(std::abs(zs[k].ordinate - bisect(zs[k].ordinate - 0.05, zs[k].ordinate + 0.05)) < 1e-9);
  }
  CHECK(find_zeros(0.0, 10.0, 0.1, 1e-10).empty());
}

TEST_CASE("find_zeros: zeros are simple at resolution") {
  for (const auto& z : find_zeros(0.0, 60.0, 0.1, 1e-12)) {
    const double h = 1e-6;
    const double left = scaled_critical_line_function(z.ordinate - h);
    const double right = scaled_critical_line_function(z.ordinate + h);
    CHECK(left * right < 0.0);
    CHECK(std::abs(right - left) / (2.0 * h) > 1e-3);
  }
}

TEST_CASE("find_zeros: result independent of thread count") {
  const auto one = find_zeros(10.0, 80.0, 0.1, 1e-11, 1);
  const auto many = find_zeros(10.0, 80.0, 0.1, 1e-11, 7);
  REQUIRE(one.size() == many.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].ordinate == many[k].ordinate);
    CHECK(one[k].index == many[k].index);
  }
  // N(80) = 21
  CHECK(one.size() == 21);
}

TEST_CASE("find_zeros: hundredth zero") {
  const auto zs = find_zeros(0.0, 240.0, 0.1, 1e-10);
  REQUIRE(zs.size() >= 100);
  CHECK(std::abs(zs[99].ordinate - 236.52422966581620580) < 1e-8);
}

TEST_CASE("find_zeros: argument checks") {
  CHECK_THROWS_AS(find_zeros(-1.0, 10.0), RangeError);
  CHECK_THROWS_AS(find_zeros(5.0, 5.0), RangeError);
  CHECK_THROWS_AS(find_zeros(0.0, 400.0), RangeError);
  CHECK_THROWS_AS(find_zeros(0.0, 10.0, 0.6), PreconditionError);
  CHECK_THROWS_AS(find_zeros(0.0, 10.0, 0.1, 0.0), PreconditionError);
}

TEST_CASE("count_zeros_rectangle: examples") {
  using numerics::ContourRectangle;
  CHECK(count_zeros_rectangle(ContourRectangle(0.0, 1.0, 10.0, 15.0)) == 1);
  CHECK(count_zeros_rectangle(ContourRectangle(0.0, 1.0, 0.0, 10.0)) == 0);
  CHECK(count_zeros_rectangle(ContourRectangle(2.0, 3.0, 0.0, 50.0)) == 0);
  CHECK(count_zeros_rectangle(ContourRectangle(0.0, 1.0, 0.0, 50.0)) == 10);
  // Conjugate zeros below the axis are counted too.
  CHECK(count_zeros_rectangle(ContourRectangle(0.0, 1.0, -15.0, 15.0)) == 2);
  // Top edge through the first zero: nudged instead of failing.
  CHECK(count_zeros_rectangle(ContourRectangle(0.0, 1.0, 10.0, 14.134725141734694)) == 1);
}

TEST_CASE("scan_zeros: cross-check") {
  const auto scan = scan_zeros(0.0, 30.0, 0.1, 1e-10);
  CHECK(scan.zeros.size() == 3);
  CHECK(scan.rectangle_count == 3);
  CHECK(scan.consistent);
  CHECK(scan.warnings.empty());

  const auto coarse = scan_zeros(40.0, 50.0, 0.5, 1e-10);
  CHECK(coarse.rectangle_count == 4);
  CHECK(coarse.consistent);
}
