#include "rzlab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rzlab/errors.hpp"
#include "rzlab/parallel.hpp"

namespace rzlab::zeros {

namespace {

using numerics::cplx;

constexpr double kQuarterPi = 0.25 * std::numbers::pi;
constexpr double kGridCollision = 1e-12;
constexpr double kBoundaryNudge = 1e-3;
constexpr std::size_t kPointsPerChunk = 64;

void check_scan_arguments(double t_min, double t_max, double step, double tol) {
  if (!(t_min >= 0.0) || !(t_max > t_min) || !(t_max <= kMaxOrdinate))
    throw RangeError("find_zeros: need 0 <= t_min < t_max <= " + std::to_string(kMaxOrdinate));
  if (!(step > 0.0) || step > 0.5) throw PreconditionError("find_zeros: step must lie in (0, 0.5]");
  if (!(tol > 0.0)) throw PreconditionError("find_zeros: tol must be positive");
}

std::vector<double> make_grid(double t_min, double t_max, double step, double offset) {
  std::vector<double> grid{t_min};
  for (double t = t_min + offset; t < t_max; t += step) {
    if (t > grid.back()) grid.push_back(t);
  }
  if (t_max > grid.back()) grid.push_back(t_max);
  return grid;
}

struct Sampled {
  std::vector<double> values;
  bool collision = false;
};

Sampled sample(const std::vector<double>& grid, int jobs) {
  Sampled out;
  out.values.resize(grid.size());
  const std::size_t chunks = (grid.size() + kPointsPerChunk - 1) / kPointsPerChunk;
  parallel_for(chunks, jobs, [&](std::size_t c) {
    const std::size_t end = std::min(grid.size(), (c + 1) * kPointsPerChunk);
    for (std::size_t i = c * kPointsPerChunk; i < end; ++i)
      out.values[i] = scaled_critical_line_function(grid[i]);
  });
  for (double v : out.values) {
    if (std::abs(v) <= kGridCollision) out.collision = true;
  }
  return out;
}

ZetaZero refine(double lo, double hi, double tol) {
  const double t = numerics::find_root_bracketed(scaled_critical_line_function, {lo, hi}, tol);
  const auto value = critical_line_function(t);
  ZetaZero z;
  z.ordinate = t;
  z.log_residual = value.log_modulus;
  z.residual = value.modulus();
  return z;
}

int winding_of_xi(const numerics::ContourRectangle& rect) {
  // The positive factor exp(pi |t| / 4) keeps |g| of order one without
  // changing the argument.
  auto g = [](cplx s) {
    const auto v = zeta::xi(zeta::ComplexArgument(s));
    if (v.is_zero()) return cplx(0.0);
    return std::polar(std::exp(v.log_modulus + kQuarterPi * std::abs(s.imag())), v.phase);
  };
  return numerics::winding_number(g, rect);
}

struct Counted {
  int count;
  numerics::ContourRectangle rect;
};

Counted count_with_nudge(const numerics::ContourRectangle& rect) {
  const double shifts[] = {0.0, kBoundaryNudge, -kBoundaryNudge};
  for (double shift : shifts) {
    const double lo = rect.im_min == 0.0 ? 0.0 : rect.im_min - shift;
    const numerics::ContourRectangle moved(rect.re_min, rect.re_max, lo, rect.im_max + shift);
    try {
      return {winding_of_xi(moved), moved};
    } catch (const BoundaryZeroError&) {
      // try the next placement
    }
  }
  throw BoundaryZeroError("count_zeros_rectangle: zero on the boundary after nudging");
}

}  // namespace

zeta::SignedLogComplex critical_line_function(double t) {
  auto v = zeta::xi(zeta::ComplexArgument(0.5, std::abs(t)));
  // xi is real on the critical line; discard the rounding-level phase.
  v.phase = v.sign_hint > 0 ? 0.0 : std::numbers::pi;
  return v;
}

double scaled_critical_line_function(double t) {
  const auto v = critical_line_function(t);
  if (v.is_zero()) return 0.0;
  return v.sign_hint * std::exp(v.log_modulus + kQuarterPi * std::abs(t));
}

std::vector<ZetaZero> find_zeros(double t_min, double t_max, double step, double tol, int jobs) {
  check_scan_arguments(t_min, t_max, step, tol);
  jobs = resolve_jobs(jobs);

  std::vector<double> grid = make_grid(t_min, t_max, step, step);
  Sampled values = sample(grid, jobs);
  if (values.collision) {
    grid = make_grid(t_min, t_max, step, step / 3.0);
    values = sample(grid, jobs);
  }

  std::vector<std::size_t> brackets;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double a = values.values[i];
    const double b = values.values[i + 1];
    if (a == 0.0 && i == 0) brackets.push_back(i);
    if ((a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0) || b == 0.0) brackets.push_back(i);
  }

  std::vector<ZetaZero> found(brackets.size());
  parallel_for(brackets.size(), jobs, [&](std::size_t k) {
    const std::size_t i = brackets[k];
    const double a = values.values[i];
    const double b = values.values[i + 1];
    if (b == 0.0 || a == 0.0) {
      const double t = b == 0.0 ? grid[i + 1] : grid[i];
      const auto v = critical_line_function(t);
      found[k] = {t, v.modulus(), v.log_modulus, 0};
      return;
    }
    found[k] = refine(grid[i], grid[i + 1], tol);
  });

  std::sort(found.begin(), found.end(),
            [](const ZetaZero& x, const ZetaZero& y) { return x.ordinate < y.ordinate; });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const ZetaZero& x, const ZetaZero& y) { return x.ordinate == y.ordinate; }),
              found.end());
  for (std::size_t k = 0; k < found.size(); ++k) found[k].index = static_cast<int>(k) + 1;
  return found;
}

int count_zeros_rectangle(const numerics::ContourRectangle& rect) { return count_with_nudge(rect).count; }

ZeroScan scan_zeros(double t_min, double t_max, double step, double tol, int jobs) {
  ZeroScan scan;
  scan.zeros = find_zeros(t_min, t_max, step, tol, jobs);
  const auto counted = count_with_nudge(numerics::ContourRectangle(0.0, 1.0, t_min, t_max));
  scan.rectangle_count = counted.count;

  // Zeros the nudged rectangle covers beyond (or excludes from) the scan range.
  int expected = 0;
  for (const auto& z : scan.zeros) {
    if (z.ordinate > counted.rect.im_min && z.ordinate < counted.rect.im_max) ++expected;
  }
  scan.consistent = expected == scan.rectangle_count;
  if (!scan.consistent) {
    std::ostringstream msg;
    msg << "coarse grid: scan found " << expected << " zeros but the argument principle counts "
        << scan.rectangle_count << "; reduce the step";
    scan.warnings.push_back(msg.str());
  }
  return scan;
}

}  // namespace rzlab::zeros
