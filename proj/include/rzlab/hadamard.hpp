#pragma once

// Truncated Hadamard product
//
//   xi(z) = z^m e^{A + B z} prod_rho (1 - z / rho) e^{z / rho}
//
// over the zeros rho = 1/2 +- i t_n of a computed catalog.

#include <complex>
#include <functional>
#include <vector>

#include "rzlab/zeros.hpp"

namespace rzlab::hadamard {

using cplx = std::complex<double>;

struct HadamardParams {
  int m = 0;  // order of the zero at the origin; 0 for xi
  cplx A;
  cplx B;
};

/// Positive, increasing zero ordinates t_n. Each stands for the pair 1/2 +- i t_n.
class ZeroCatalog {
 public:
  explicit ZeroCatalog(std::vector<double> ordinates);
  static ZeroCatalog from_zeros(const std::vector<zeros::ZetaZero>& found);
  /// The first `count` zeros, located with zeros::find_zeros.
  static ZeroCatalog first(std::size_t count, int jobs = 0);

  const std::vector<double>& ordinates() const { return ordinates_; }
  std::size_t size() const { return ordinates_.size(); }

 private:
  std::vector<double> ordinates_;
};

/// A = log f(0) and B = f'(0) / f(0) for f = exp(log_eval), B from central
/// differences with step 1e-5 and one Richardson level. m = 0.
HadamardParams fit_constants(const std::function<cplx(cplx)>& log_eval);

/// fit_constants applied to zeta::log_xi.
HadamardParams fit_constants();

/// Product over the first N catalog ordinates, both members of each
/// conjugate pair. Evaluated as a sum of logs and exponentiated once.
/// Returns exactly 0 when z is one of the included zeros.
cplx hadamard_partial(const HadamardParams& params, const ZeroCatalog& catalog, cplx z, std::size_t n);

/// |P_N(z) / xi(z) - 1| for each N in `counts`.
std::vector<double> convergence_profile(const HadamardParams& params, const ZeroCatalog& catalog, cplx z,
                                        const std::vector<std::size_t>& counts);

}  // namespace rzlab::hadamard
