#include "pdmosc/rosen_morse.hpp"

#include "pdmosc/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pdmosc {

namespace {

constexpr double kThresholdMargin = 1e-12;

// log(1 + e^y) without overflow.
double softplus(double y) {
  return std::max(y, 0.0) + std::log1p(std::exp(-std::abs(y)));
}

void check_state(const RosenMorseParams &p, int n) {
  const auto nmax = rm_nmax(p);
  if (n < 0 || !nmax || n > *nmax)
    throw std::out_of_range("Rosen-Morse state n = " + std::to_string(n) +
                            " is outside the bound-state window");
}

} // namespace

RosenMorseParams::RosenMorseParams(double A, double B) : A_(A), B_(B) {
  if (!std::isfinite(A) || !std::isfinite(B))
    throw std::invalid_argument("RosenMorseParams: A and B must be finite");
  if (!(A > 0.0))
    throw std::invalid_argument("RosenMorseParams: requires A > 0");
  if (!(B < A * A))
    throw std::invalid_argument("RosenMorseParams: requires B < A^2");
  if (B != 0.0) {
    const double edge = A - std::sqrt(std::abs(B));
    if (edge >= -kThresholdMargin &&
        std::abs(edge - std::round(edge)) <= kThresholdMargin)
      throw std::invalid_argument(
          "RosenMorseParams: A - sqrt|B| lies on an integer threshold, the "
          "edge state has zero norm");
  }
}

double rm_potential(const RosenMorseParams &p, double u) {
  if (std::isnan(u))
    throw std::invalid_argument("rm_potential: u is NaN");
  const double sech = 1.0 / std::cosh(u);
  return -p.A() * (p.A() + 1.0) * sech * sech + 2.0 * p.B() * std::tanh(u);
}

std::optional<int> rm_nmax(const RosenMorseParams &p) {
  const double edge = p.A() - std::sqrt(std::abs(p.B())) - kThresholdMargin;
  if (edge <= 0.0)
    return std::nullopt;
  return static_cast<int>(std::ceil(edge)) - 1;
}

double rm_energy(const RosenMorseParams &p, int n) {
  check_state(p, n);
  const double k = p.A() - n;
  return -k * k - p.B() * p.B() / (k * k);
}

JacobiExponents rm_exponents(const RosenMorseParams &p, int n) {
  const double k = p.A() - n;
  const double s = p.B() / k;
  return {k + s, k - s};
}

double rm_log_norm(const RosenMorseParams &p, int n) {
  check_state(p, n);
  const double A = p.A();
  const double k = A - n;
  const double s = p.B() / k;
  const double bracket = k * k - s * s;
  return (n - A) * std::numbers::ln2 +
         0.5 * (ln_gamma(n + 1.0) + ln_gamma(2.0 * A - n + 1.0) +
                std::log(bracket) - std::log(k) - ln_gamma(A + 1.0 + s) -
                ln_gamma(A + 1.0 - s));
}

double rm_wavefunction(const RosenMorseParams &p, int n, double u) {
  const double log_norm = rm_log_norm(p, n);
  if (std::isinf(u))
    return 0.0;
  const auto [alpha, beta] = rm_exponents(p, n);
  const double t = std::tanh(u);
  double log_minus, log_plus;
  if (std::abs(t) < 0.5) {
    log_minus = std::log1p(-t);
    log_plus = std::log1p(t);
  } else {
    // 1 -+ tanh u = 2 / (1 + e^{+-2u})
    log_minus = std::numbers::ln2 - softplus(2.0 * u);
    log_plus = std::numbers::ln2 - softplus(-2.0 * u);
  }
  const double envelope =
      std::exp(log_norm + 0.5 * (alpha * log_minus + beta * log_plus));
  return envelope * jacobi_poly(n, alpha, beta, t);
}

double rm_wavefunction_gegenbauer(const RosenMorseParams &p, int n, double u) {
  if (p.B() != 0.0)
    throw std::invalid_argument(
        "rm_wavefunction_gegenbauer: only defined for B = 0");
  check_state(p, n);
  if (std::isinf(u))
    return 0.0;
  const double A = p.A();
  const double k = A - n;
  const double log_coeff =
      ln_gamma(2.0 * k + 1.0) - k * std::numbers::ln2 - ln_gamma(k + 1.0) +
      0.5 * (std::log(k) + ln_gamma(n + 1.0) - ln_gamma(2.0 * A - n + 1.0));
  // ln sech u = ln 2 - |u| - log1p(e^{-2|u|})
  const double log_sech =
      std::numbers::ln2 - std::abs(u) - std::log1p(std::exp(-2.0 * std::abs(u)));
  return std::exp(log_coeff + k * log_sech) *
         gegenbauer_poly(n, k + 0.5, std::tanh(u));
}

double rm_norm_integral(const RosenMorseParams &p, int n, double cutoff) {
  check_state(p, n);
  static const QuadratureRule rule = gauss_legendre(24);
  const int panels = std::max(8, static_cast<int>(std::ceil(4.0 * cutoff)));
  const double width = 2.0 * cutoff / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = -cutoff + i * width;
    total += rule.integrate(
        [&](double u) {
          const double v = rm_wavefunction(p, n, u);
          return v * v;
        },
        lo, lo + width);
  }
  return total;
}

} // namespace pdmosc
