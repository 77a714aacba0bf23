#include "rzlab/zeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "rzlab/errors.hpp"
#include "rzlab/specfun.hpp"

namespace rzlab::zeta {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k)! for k = 1..6.
constexpr std::array<double, 6> kEulerMaclaurin = {
    1.0 / 12.0,          -1.0 / 720.0,           1.0 / 30240.0,
    -1.0 / 1209600.0,    1.0 / 47900160.0,       -691.0 / 1307674368000.0};

struct EulerMaclaurin {
  cplx regular;    // sum_{n<N} n^-s + N^-s / 2 + Bernoulli corrections
  cplx tail_power; // N^{1-s}, the coefficient of 1/(s-1)
  int terms;       // N
};

EulerMaclaurin euler_maclaurin(cplx s) {
  const int n_terms = std::max(20, static_cast<int>(std::ceil(2.0 * std::abs(s.imag()))));
  cplx sum = 0.0;
  for (int n = n_terms - 1; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double log_n = std::log(static_cast<double>(n_terms));
  const cplx n_pow = std::exp(-s * log_n);
  sum += 0.5 * n_pow;

  const double n_d = static_cast<double>(n_terms);
  cplx rising = s;                   // s (s+1) ... (s + 2k - 2)
  cplx scale = n_pow / n_d;          // N^{-s-2k+1}
  for (std::size_t k = 0; k < kEulerMaclaurin.size(); ++k) {
    sum += kEulerMaclaurin[k] * rising * scale;
    const double j = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (s + j) * (s + j + 1.0);
    scale /= n_d * n_d;
  }
  return {sum, n_pow * n_d, n_terms};
}

void check_window(const ComplexArgument& s) {
  if (std::abs(s.t) > kMaxHeight) throw RangeError("zeta: |Im s| exceeds the supported window");
  if (s.sigma < kMinSigma) throw RangeError("zeta: Re s below the supported window");
}

// log of the reflection factor 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s).
cplx log_reflection_factor(cplx s) {
  return s * std::log(2.0) + (s - 1.0) * std::log(kPi) + specfun::log_sin(0.5 * kPi * s) +
         specfun::log_gamma(1.0 - s);
}

}  // namespace

ComplexArgument::ComplexArgument(double sigma_, double t_) : sigma(sigma_), t(t_) {
  if (!std::isfinite(sigma) || !std::isfinite(t))
    throw DomainError("ComplexArgument: components must be finite");
}

ComplexArgument::ComplexArgument(cplx s) : ComplexArgument(s.real(), s.imag()) {}

double normalize_phase(double phase) {
  double p = std::remainder(phase, 2.0 * kPi);
  if (p <= -kPi) p += 2.0 * kPi;
  return p;
}

SignedLogComplex SignedLogComplex::from_log(cplx log_value) {
  SignedLogComplex out;
  out.log_modulus = log_value.real();
  out.phase = std::isfinite(log_value.imag()) ? normalize_phase(log_value.imag()) : 0.0;
  out.sign_hint = std::cos(out.phase) >= 0.0 ? 1 : -1;
  return out;
}

SignedLogComplex SignedLogComplex::from_complex(cplx value) {
  if (value == cplx(0.0, 0.0)) return SignedLogComplex{};
  return from_log(std::log(value));
}

cplx SignedLogComplex::to_complex() const {
  if (is_zero()) return 0.0;
  return std::polar(std::exp(log_modulus), phase);
}

double SignedLogComplex::modulus() const { return std::exp(log_modulus); }

bool SignedLogComplex::is_zero() const {
  return log_modulus == -std::numeric_limits<double>::infinity();
}

double SignedLogComplex::to_real() const { return sign_hint * modulus(); }

SignedLogComplex SignedLogComplex::operator*(const SignedLogComplex& other) const {
  return from_log(cplx(log_modulus + other.log_modulus, phase + other.phase));
}

SignedLogComplex SignedLogComplex::operator/(const SignedLogComplex& other) const {
  return from_log(cplx(log_modulus - other.log_modulus, phase - other.phase));
}

SignedLogComplex SignedLogComplex::reciprocal() const {
  return from_log(cplx(-log_modulus, -phase));
}

cplx zeta(ComplexArgument s) {
  check_window(s);
  const cplx z = s.value();
  if (z == cplx(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
  if (s.sigma >= 0.0) {
    const auto em = euler_maclaurin(z);
    return em.regular + em.tail_power / (z - 1.0);
  }
  return std::exp(log_reflection_factor(z)) * zeta(ComplexArgument(1.0 - z));
}

cplx zeta_times_s_minus_1(ComplexArgument s) {
  check_window(s);
  const cplx z = s.value();
  if (s.sigma >= 0.0) {
    const auto em = euler_maclaurin(z);
    return (z - 1.0) * em.regular + em.tail_power;
  }
  return (z - 1.0) * zeta(s);
}

cplx log_xi(ComplexArgument s) {
  check_window(s);
  if (s.sigma > 1.0 - kMinSigma) throw RangeError("xi: Re s above the supported window");
  const cplx z = s.value();
  const double log_pi = std::log(kPi);
  if (s.sigma >= 0.0) {
    // xi = Gamma(1 + s/2) pi^{-s/2} (s-1) zeta(s)
    return specfun::log_gamma(1.0 + 0.5 * z) - 0.5 * z * log_pi + std::log(zeta_times_s_minus_1(s));
  }
  // Re s < 0: Gamma(1 + s/2) sin(pi s/2) = (s/2) pi / Gamma(1 - s/2) removes the
  // cancelling pole/zero pairs at s = -2, -4, ... The factor s/2 is merged
  // with zeta(1-s) as -(1/2) * (w - 1) zeta(w), w = 1 - s, where w - 1 = -s is
  // known exactly; this keeps full accuracy as s -> 0.
  const cplx one_minus = 1.0 - z;
  const auto em = euler_maclaurin(one_minus);
  const cplx tail = std::exp(z * std::log(static_cast<double>(em.terms)));  // N^{1-w}
  const cplx reflected = -z * em.regular + tail;                            // (w - 1) zeta(w)
  return std::log(-0.5 * reflected) + log_pi - specfun::log_gamma(1.0 - 0.5 * z) - 0.5 * z * log_pi +
         std::log(z - 1.0) + z * std::log(2.0) + (z - 1.0) * log_pi + specfun::log_gamma(one_minus);
}

SignedLogComplex xi(ComplexArgument s) { return SignedLogComplex::from_log(log_xi(s)); }

double xi_symmetry_residual(ComplexArgument s) {
  const cplx a = log_xi(s);
  const cplx b = log_xi(ComplexArgument(1.0 - s.value()));
  const double top = std::max(a.real(), b.real());
  if (top == -std::numeric_limits<double>::infinity()) return 0.0;
  const cplx wa = std::exp(cplx(a.real() - top, a.imag()));
  const cplx wb = std::exp(cplx(b.real() - top, b.imag()));
  return std::abs(wa - wb) / (std::abs(wa) + std::abs(wb));
}

}  // namespace rzlab::zeta
