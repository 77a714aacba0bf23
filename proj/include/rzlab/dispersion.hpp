#pragma once

// Reconstruction of Jost functions from the S matrix on the real momentum
// line:
//
//   F+(k) = P+(k) exp( (1/2 pi i) int ln(S^-1(k') P-(k')^2) / (k' - k - i0) dk' )
//
// with Blaschke products P+-(k) = prod_j (k -+ i k_j) / (k +- i k_j) over
// bound-state momenta k_j. F- = S F+.

#include <complex>
#include <vector>

#include "rzlab/scattering.hpp"

namespace rzlab::dispersion {

using cplx = std::complex<double>;

/// Nodes with |S| below this violate the nonvanishing condition.
inline constexpr double kNonvanishingFloor = 1e-12;
/// |ln(S^-1 P-^2)| allowed at the grid ends.
inline constexpr double kEndpointTolerance = 1e-4;
/// Largest phase increment between neighbouring nodes that is still
/// resolved unambiguously.
inline constexpr double kMaxPhaseStep = 0.5 * 3.14159265358979323846;

struct BlaschkeSpec {
  std::vector<double> bound_state_momenta;  // all > 0
  explicit BlaschkeSpec(std::vector<double> momenta = {});
  std::size_t count() const { return bound_state_momenta.size(); }
};

enum class Branch { plus, minus };

/// prod_j (k -+ i k_j) / (k +- i k_j); 1 for an empty spec.
cplx blaschke_product(const BlaschkeSpec& spec, double k, Branch sign);

/// S(k) on a strictly increasing grid symmetric about 0.
struct RealLineSamples {
  std::vector<double> grid;
  std::vector<cplx> s_values;
  RealLineSamples(std::vector<double> grid_, std::vector<cplx> s_values_);
};

/// Uniform grid of `nodes` points on [-half_width, half_width] (nodes odd, >= 5).
std::vector<double> uniform_grid(double half_width, std::size_t nodes);

template <class F>
RealLineSamples sample_on_grid(F&& s_of_k, double half_width, std::size_t nodes) {
  std::vector<double> grid = uniform_grid(half_width, nodes);
  std::vector<cplx> values;
  values.reserve(grid.size());
  for (double k : grid) values.push_back(s_of_k(k));
  return RealLineSamples(std::move(grid), std::move(values));
}

/// Continuous log of S^-1 P-^2 at the nodes, with the branch that vanishes
/// at the left end. Throws NonvanishingViolation if |S| < kNonvanishingFloor
/// at a node, GridError if a phase step exceeds kMaxPhaseStep (grid too
/// coarse) or the log is not below kEndpointTolerance at both ends (grid too
/// narrow).
std::vector<cplx> log_integrand(const RealLineSamples& samples, const BlaschkeSpec& spec);

/// F+(k) for k strictly inside the grid: principal value on the samples plus
/// half the integrand at k.
cplx reconstruct_jost_plus(const RealLineSamples& samples, const BlaschkeSpec& spec, double k);

struct JostPair {
  cplx plus;
  cplx minus;
};

/// F+ and F- = S F+ at every node except the two endpoints. Nodes are
/// processed on `jobs` threads (0 = default); the result is independent of it.
std::vector<JostPair> reconstruct_on_grid(const RealLineSamples& samples, const BlaschkeSpec& spec,
                                          int jobs = 0);

/// Round trip S -> (F+, F-) -> S. The Blaschke factors are stripped from the
/// reconstructed F+-, the remainders G+- are replaced by their Cauchy
/// (Hilbert-transform) counterparts 1 +- (1/pi i) PV int (G+- - 1) / (k' - k),
/// and the returned value is max |S - P- G~- / (P+ G~+)| over nodes with
/// |k| <= half_width / 3. It therefore tests that F+ and F- extend
/// analytically to the upper and lower half planes; the error is set by the
/// truncation of the k-line.
double roundtrip_residual(const RealLineSamples& samples, const BlaschkeSpec& spec, int jobs = 0);

/// S0(k) = (k - i a)(k + i b) / ((k + i a)(k - i b)) times P-(k)^2 for the
/// given bound states. Exact F+ = P+(k) (k + i a) / (k + i b).
struct RationalModel {
  double alpha = 1.0;
  double beta = 1.001;
  BlaschkeSpec bound_states;

  cplx s_matrix(double k) const;
  cplx jost_plus(double k) const;
  RealLineSamples sample(double half_width, std::size_t nodes) const;
};

/// Zero-energy limit: F- = 1 and F+ = S^-1, read off an S-matrix value.
struct ZeroEnergyJost {
  zeta::SignedLogComplex plus;
  zeta::SignedLogComplex minus;
};
ZeroEnergyJost zero_energy_jost(const scattering::SMatrixValue& s);

}  // namespace rzlab::dispersion
