#include "rzlab/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace rzlab::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae (descending), Kronrod weights, and the Gauss weights for
// the odd-indexed abscissae plus the centre.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  cplx value;
  double error;
  double resabs;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod15(const RealToComplex& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const cplx fc = f(centre);
  cplx kronrod = kWgk[7] * fc;
  cplx gauss = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const cplx f1 = f(centre - dx);
    const cplx f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double h = std::abs(half);
  Segment s{a, b, kronrod * half, 0.0, resabs * h};
  // Rounding floor keeps the estimate an upper bound when the rules agree exactly.
  s.error = std::max(std::abs((kronrod - gauss) * half), 50.0 * kEps * s.resabs);
  if (!std::isfinite(s.error)) s.error = std::numeric_limits<double>::infinity();
  return s;
}

constexpr std::size_t kEvalsPerRule = 15;

// Cubic Lagrange interpolation on four nodes around x; returns value and
// first derivative.
std::pair<cplx, cplx> local_cubic(std::span<const double> nodes, std::span<const cplx> values,
                                  double x) {
  const std::size_t n = nodes.size();
  auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
  std::size_t right = static_cast<std::size_t>(it - nodes.begin());
  std::size_t i0 = right >= 2 ? right - 2 : 0;
  if (i0 + 4 > n) i0 = n >= 4 ? n - 4 : 0;
  const std::size_t m = std::min<std::size_t>(4, n);
  cplx value = 0.0;
  cplx deriv = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double xj = nodes[i0 + j];
    double basis = 1.0;
    double dbasis = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
      if (l == j) continue;
      const double xl = nodes[i0 + l];
      double term = 1.0 / (xj - xl);
      for (std::size_t q = 0; q < m; ++q) {
        if (q == j || q == l) continue;
        term *= (x - nodes[i0 + q]) / (xj - nodes[i0 + q]);
      }
      dbasis += term;
      basis *= (x - xl) / (xj - xl);
    }
    value += basis * values[i0 + j];
    deriv += dbasis * values[i0 + j];
  }
  return {value, deriv};
}

}  // namespace

BracketInterval::BracketInterval(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(lo < hi)) throw PreconditionError("BracketInterval requires lo < hi");
}

ContourRectangle::ContourRectangle(double re_min_, double re_max_, double im_min_,
                                   double im_max_)
    : re_min(re_min_), re_max(re_max_), im_min(im_min_), im_max(im_max_) {
  if (!(re_min < re_max) || !(im_min < im_max))
    throw PreconditionError("ContourRectangle requires re_min < re_max and im_min < im_max");
}

QuadratureResult integrate_adaptive(const RealToComplex& f, double a, double b, double tol,
                                    std::size_t max_evaluations) {
  if (!(tol > 0.0)) throw PreconditionError("integrate_adaptive: tol must be positive");
  if (a == b) return {0.0, 0.0, 1};

  std::priority_queue<Segment> heap;
  Segment first = gauss_kronrod15(f, a, b);
  std::size_t evaluations = kEvalsPerRule;
  cplx total = first.value;
  double total_error = first.error;
  double total_resabs = first.resabs;
  heap.push(first);

  // Done when below tolerance, or when the worst segment is already at its
  // rounding floor and bisection cannot improve anything.
  auto converged = [&] {
    if (total_error <= tol) return true;
    const Segment& worst = heap.top();
    return worst.error <= 50.0 * kEps * worst.resabs * (1.0 + 1e-12);
  };

  while (!converged()) {
    if (evaluations + 2 * kEvalsPerRule > max_evaluations) {
      QuadratureResult best{total, total_error, evaluations};
      throw BudgetExhausted("integrate_adaptive: evaluation budget exhausted", best);
    }
    Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (std::abs(worst.b - worst.a) <= 4.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b)) ||
        mid == worst.a || mid == worst.b) {
      // Cannot split further; accept what the rule gives.
      break;
    }
    heap.pop();
    Segment left = gauss_kronrod15(f, worst.a, mid);
    Segment right = gauss_kronrod15(f, mid, worst.b);
    evaluations += 2 * kEvalsPerRule;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    total_resabs += left.resabs + right.resabs - worst.resabs;
    heap.push(left);
    heap.push(right);
    if (!std::isfinite(total_error)) {
      // Recompute to shed accumulated inf-minus-inf artefacts.
      auto copy = heap;
      total = 0.0;
      total_error = 0.0;
      total_resabs = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_error += copy.top().error;
        total_resabs += copy.top().resabs;
        copy.pop();
      }
    }
  }
  // Resum from the segment list to limit drift from the running updates.
  cplx sum = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, evaluations};
}

QuadratureResult integrate_semi_infinite(const RealToComplex& f, double a, double tol,
                                         std::size_t max_evaluations) {
  if (!(tol > 0.0)) throw PreconditionError("integrate_semi_infinite: tol must be positive");

  auto transformed = [&](double t) -> cplx {
    const double one_minus = 1.0 - t;
    const double x = a + t / one_minus;
    return f(x) / (one_minus * one_minus);
  };

  constexpr int kMaxBlocks = 50;
  constexpr int kStallLimit = 8;
  QuadratureResult out{0.0, 0.0, 0};
  double previous = std::numeric_limits<double>::infinity();
  int small_streak = 0;
  int stall = 0;
  for (int j = 0; j < kMaxBlocks; ++j) {
    const double lo = (j == 0) ? 0.0 : 1.0 - std::ldexp(1.0, -j);
    const double hi = 1.0 - std::ldexp(1.0, -(j + 1));
    const double block_tol = tol * std::ldexp(1.0, -std::min(j + 2, 30));
    if (out.evaluations >= max_evaluations) {
      throw BudgetExhausted("integrate_semi_infinite: evaluation budget exhausted", out);
    }
    QuadratureResult block;
    try {
      block = integrate_adaptive(transformed, lo, hi, block_tol, max_evaluations - out.evaluations);
    } catch (const BudgetExhausted& e) {
      QuadratureResult best = out;
      best.value += e.best_estimate().value;
      best.error_estimate += e.best_estimate().error_estimate;
      best.evaluations += e.best_estimate().evaluations;
      throw BudgetExhausted("integrate_semi_infinite: evaluation budget exhausted", best);
    }
    out.value += block.value;
    out.error_estimate += block.error_estimate;
    out.evaluations += block.evaluations;

    const double magnitude = std::abs(block.value);
    if (!std::isfinite(magnitude)) throw DivergenceError("integrate_semi_infinite: non-finite tail");
    if (j >= 2 && magnitude >= 0.9 * previous && magnitude > tol) {
      if (++stall >= kStallLimit)
        throw DivergenceError("integrate_semi_infinite: tail contributions are not shrinking");
    } else {
      stall = 0;
    }
    if (j >= 2 && magnitude < 0.125 * tol && magnitude <= previous) {
      if (++small_streak >= 2) {
        out.error_estimate += magnitude;
        return out;
      }
    } else {
      small_streak = 0;
    }
    previous = magnitude;
  }
  throw DivergenceError("integrate_semi_infinite: tail did not become negligible");
}

cplx principal_value_integral(const RealToComplex& f, double c, double a, double b, double tol,
                              std::size_t max_evaluations) {
  if (!(a < c && c < b)) throw DomainError("principal_value_integral: c must lie in (a, b)");
  if (!(tol > 0.0)) throw PreconditionError("principal_value_integral: tol must be positive");
  const double h = std::min(c - a, b - c);
  auto folded = [&](double u) -> cplx { return (f(c + u) - f(c - u)) / u; };
  QuadratureResult sym = integrate_adaptive(folded, 0.0, h, 0.5 * tol, max_evaluations);
  cplx total = sym.value;
  auto plain = [&](double x) -> cplx { return f(x) / (x - c); };
  if (b - c > h) {
    total += integrate_adaptive(plain, c + h, b, 0.5 * tol, max_evaluations).value;
  } else if (c - a > h) {
    total += integrate_adaptive(plain, a, c - h, 0.5 * tol, max_evaluations).value;
  }
  return total;
}

cplx integrate_sampled(std::span<const double> nodes, std::span<const cplx> values) {
  const std::size_t n = nodes.size();
  if (n != values.size()) throw PreconditionError("integrate_sampled: size mismatch");
  if (n < 2) return 0.0;
  cplx sum = 0.0;
  std::size_t i = 0;
  for (; i + 2 < n; i += 2) {
    const double h0 = nodes[i + 1] - nodes[i];
    const double h1 = nodes[i + 2] - nodes[i + 1];
    const double hs = h0 + h1;
    sum += hs / 6.0 *
           ((2.0 - h1 / h0) * values[i] + hs * hs / (h0 * h1) * values[i + 1] +
            (2.0 - h0 / h1) * values[i + 2]);
  }
  if (i + 1 < n) sum += 0.5 * (nodes[i + 1] - nodes[i]) * (values[i] + values[i + 1]);
  return sum;
}

cplx interpolate_sampled(std::span<const double> nodes, std::span<const cplx> values, double x) {
  if (nodes.size() != values.size() || nodes.size() < 4)
    throw PreconditionError("interpolate_sampled: need >= 4 samples");
  return local_cubic(nodes, values, x).first;
}

cplx principal_value_sampled(std::span<const double> nodes, std::span<const cplx> values,
                             double c) {
  const std::size_t n = nodes.size();
  if (n != values.size() || n < 4) throw PreconditionError("principal_value_sampled: need >= 4 samples");
  const double a = nodes.front();
  const double b = nodes.back();
  if (!(a < c && c < b)) throw DomainError("principal_value_sampled: c must lie strictly inside the grid");

  const auto [vc, dvc] = local_cubic(nodes, values, c);
  const double scale = (b - a) * 1e-12;
  std::vector<cplx> regular(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double d = nodes[j] - c;
    regular[j] = std::abs(d) <= scale ? dvc : (values[j] - vc) / d;
  }
  return integrate_sampled(nodes, regular) + vc * std::log((b - c) / (c - a));
}

double find_root_bracketed(const RealToReal& f, BracketInterval interval, double tol,
                           int max_iterations) {
  if (!(tol > 0.0)) throw PreconditionError("find_root_bracketed: tol must be positive");
  double a = interval.lo;
  double b = interval.hi;
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (!(std::signbit(fa) != std::signbit(fb)))
    throw PreconditionError("find_root_bracketed: no sign change on the bracket");

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int iter = 0; iter < max_iterations; ++iter) {
    if (std::signbit(fb) == std::signbit(fc)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * kEps * std::abs(b) + 0.25 * tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol1 || fb == 0.0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0)
        q = -q;
      else
        p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol1 ? d : (m > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw PreconditionError("find_root_bracketed: iteration limit reached");
}

int winding_number(const ComplexToComplex& g, const ContourRectangle& rect,
                   std::size_t samples_per_side, double magnitude_floor) {
  if (samples_per_side == 0) throw PreconditionError("winding_number: samples_per_side must be >= 1");
  const std::array<cplx, 5> corners = {
      cplx(rect.re_min, rect.im_min), cplx(rect.re_max, rect.im_min),
      cplx(rect.re_max, rect.im_max), cplx(rect.re_min, rect.im_max),
      cplx(rect.re_min, rect.im_min)};

  auto sample = [&](cplx z) {
    const cplx w = g(z);
    const double m = std::abs(w);
    if (!std::isfinite(m) || m <= magnitude_floor)
      throw BoundaryZeroError("winding_number: function vanishes on the contour");
    return w;
  };

  constexpr double kQuarter = 0.5 * std::numbers::pi;
  constexpr double kMinStep = 1e-12;
  double total = 0.0;
  for (int side = 0; side < 4; ++side) {
    const cplx z0 = corners[side];
    const cplx dz = corners[side + 1] - z0;
    auto point = [&](double tau) { return z0 + tau * dz; };
    const double coarse = 1.0 / static_cast<double>(samples_per_side);
    double tau = 0.0;
    cplx w_prev = sample(point(0.0));
    while (tau < 1.0) {
      double step = std::min(coarse, 1.0 - tau);
      for (;;) {
        const double tau_next = (tau + step >= 1.0) ? 1.0 : tau + step;
        const cplx w_next = sample(point(tau_next));
        const double delta = std::arg(w_next / w_prev);
        if (std::abs(delta) < kQuarter) {
          total += delta;
          tau = tau_next;
          w_prev = w_next;
          break;
        }
        step *= 0.5;
        if (step < kMinStep)
          throw BoundaryZeroError("winding_number: phase jump unresolved; zero on or near the contour");
      }
    }
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

}  // namespace rzlab::numerics
