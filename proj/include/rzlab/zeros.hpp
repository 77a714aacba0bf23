#pragma once

// Nontrivial zeros of zeta: sign changes of the real function xi(1/2 + it)
// refined by Brent's method, and argument-principle counts of xi over
// rectangles in the critical strip.

#include <string>
#include <vector>

#include "rzlab/numerics.hpp"
#include "rzlab/zeta.hpp"

namespace rzlab::zeros {

/// Largest ordinate handled by the scanner (limited by the zeta window).
inline constexpr double kMaxOrdinate = zeta::kMaxHeight;

struct ZetaZero {
  double ordinate = 0.0;      // t_n > 0
  double residual = 0.0;      // |xi(1/2 + i t_n)|
  double log_residual = 0.0;  // log |xi(1/2 + i t_n)|
  int index = 0;              // 1-based, increasing with ordinate
};

/// xi(1/2 + it) as a signed real in log form. Even in t.
zeta::SignedLogComplex critical_line_function(double t);

/// exp(pi |t| / 4) xi(1/2 + it): same sign, magnitude of order one.
double scaled_critical_line_function(double t);

/// Zeros with t_min <= t <= t_max, from sign changes on a grid of spacing
/// `step`, each bracket refined to width `tol`. Requires
/// 0 <= t_min < t_max <= kMaxOrdinate, 0 < step <= 0.5, tol > 0.
/// The grid is split into chunks scanned on `jobs` threads (0 = default);
/// the result does not depend on the split.
std::vector<ZetaZero> find_zeros(double t_min, double t_max, double step = 0.1, double tol = 1e-10,
                                 int jobs = 0);

/// Number of zeros of xi inside `rect`, with multiplicity. If a zero lies on
/// the boundary, the horizontal edges are moved by 1e-3 (outward first, then
/// inward) before giving up with BoundaryZeroError.
int count_zeros_rectangle(const numerics::ContourRectangle& rect);

struct ZeroScan {
  std::vector<ZetaZero> zeros;
  int rectangle_count = 0;  // argument-principle count on [0,1] x [t_min, t_max]
  bool consistent = false;  // rectangle_count == zeros.size()
  std::vector<std::string> warnings;
};

/// find_zeros followed by the count cross-check. A mismatch means the grid
/// missed zeros (or found spurious ones) and is reported as a warning.
ZeroScan scan_zeros(double t_min, double t_max, double step = 0.1, double tol = 1e-10, int jobs = 0);

}  // namespace rzlab::zeros
