#include "pdmosc/oscillator.hpp"

#include "pdmosc/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pdmosc {

namespace {

constexpr double kWindowMargin = 1e-12;

void check_A(double A, const char *op) {
  if (!(A > 1.0) || !std::isfinite(A)) {
    std::ostringstream msg;
    msg << op << ": requires A > 1 (got A = " << A << ")";
    throw std::invalid_argument(msg.str());
  }
}

void check_state(const OscillatorParams &p, int n) {
  if (n < 0 || n >= num_bound_states(p))
    throw std::out_of_range("oscillator state n = " + std::to_string(n) +
                            " is outside the bound-state window");
}

// Returns true when x sits on the clamped wall region, throws beyond a.
bool at_wall(const OscillatorParams &p, double x) {
  const double ax = std::abs(x);
  if (!(ax <= p.a())) {
    std::ostringstream msg;
    msg << "wavefunction: x = " << x << " outside [-" << p.a() << ", "
        << p.a() << "]";
    throw std::domain_error(msg.str());
  }
  return ax >= (1.0 - kDomainGuard) * p.a();
}

double ln_factorial(int k) {
  double s = 0.0;
  for (int i = 2; i <= k; ++i)
    s += std::log(static_cast<double>(i));
  return s;
}

} // namespace

double confinement_length(double omega0, double A) {
  check_A(A, "confinement_length");
  if (!(omega0 > 0.0))
    throw std::invalid_argument("confinement_length: requires omega0 > 0");
  return std::sqrt(2.0 / omega0) * std::pow(A * (A + 1.0) - 2.0, 0.25);
}

double shift_bound(double omega0, double A) {
  check_A(A, "shift_bound");
  if (!(omega0 > 0.0))
    throw std::invalid_argument("shift_bound: requires omega0 > 0");
  return std::sqrt(0.5 * omega0) * A * (A - 1.0) /
         std::pow(A * (A + 1.0) - 2.0, 0.75);
}

OscillatorParams::OscillatorParams(double omega0, double A, double b)
    : omega0_(omega0), A_(A), b_(b), derived_(map_parameters(omega0, A, b)) {}

double OscillatorParams::potential(double x) const {
  const double d = x - 2.0 * b_ / omega0_;
  return 0.25 * omega0_ * omega0_ * d * d;
}

int num_bound_states(const OscillatorParams &p) {
  double edge = p.A() - 1.0;
  if (p.b() != 0.0) {
    const double a = p.a();
    edge = p.A() -
           0.5 * (1.0 + std::sqrt(1.0 + 2.0 * p.omega0() * a * a * a *
                                            std::abs(p.b())));
  }
  edge -= kWindowMargin;
  if (edge <= 0.0)
    return 0;
  return static_cast<int>(std::ceil(edge));
}

double energy(const OscillatorParams &p, int n) {
  check_state(p, n);
  return transform_energy(p.map(), rm_energy(p.source(), n));
}

double energy_direct_form(const OscillatorParams &p, int n) {
  if (p.b() != 0.0)
    throw std::invalid_argument(
        "energy_direct_form: only the unshifted model has this form");
  check_state(p, n);
  const double a2 = p.a() * p.a();
  const double k = p.A() - n;
  return -k * k / a2 + 0.25 * p.omega0() * p.omega0() * a2 + 1.0 / a2;
}

double energy_expanded_form(const OscillatorParams &p, int n) {
  check_state(p, n);
  const double w = p.omega0();
  const double a2 = p.a() * p.a();
  const double root = std::sqrt(1.0 + std::pow(3.0 / (w * a2), 2));
  const double h = n + 0.5;
  double e = w * root * h - h * h / a2 - 1.25 / a2;
  if (p.b() != 0.0) {
    const double f = h * h - w * a2 * root * h + 0.25 * w * w * a2 * a2 + 2.25;
    const double g = f - 0.25 * w * w * a2 * a2;
    e += p.b() * p.b() * g / f;
  }
  return e;
}

double wavefunction_jacobi(const OscillatorParams &p, int n, double x) {
  check_state(p, n);
  if (at_wall(p, x))
    return 0.0;
  const double A = p.A();
  const double a = p.a();
  const double k = A - n;
  // s = omega0 a^3 b / (2 (A - n))
  const double s = p.omega0() * a * a * a * p.b() / (2.0 * k);
  const double log_norm =
      (n - A) * std::numbers::ln2 +
      0.5 * (ln_gamma(n + 1.0) + ln_gamma(2.0 * A - n + 1.0) +
             std::log(k * k - s * s)) -
      0.5 * (std::log(a) + std::log(k) + ln_gamma(A + 1.0 - s) +
             ln_gamma(A + 1.0 + s));
  const double t = x / a;
  const double envelope =
      std::exp(log_norm + 0.5 * (k - 1.0 - s) * std::log1p(-t) +
               0.5 * (k - 1.0 + s) * std::log1p(t));
  return envelope * jacobi_poly(n, k - s, k + s, t);
}

double wavefunction_gegenbauer(const OscillatorParams &p, int n, double x) {
  if (p.b() != 0.0)
    throw std::invalid_argument(
        "wavefunction_gegenbauer: only defined for the unshifted model");
  check_state(p, n);
  if (at_wall(p, x))
    return 0.0;
  const double A = p.A();
  const double a = p.a();
  const double k = A - n;
  const double log_coeff =
      ln_gamma(2.0 * k + 1.0) - k * std::numbers::ln2 - ln_gamma(k + 1.0) +
      0.5 * (std::log(k) + ln_gamma(n + 1.0) - std::log(a) -
             ln_gamma(2.0 * A - n + 1.0));
  const double t = x / a;
  const double envelope =
      std::exp(log_coeff + 0.5 * (k - 1.0) * std::log1p(-t * t));
  return envelope * gegenbauer_poly(n, k + 0.5, t);
}

double wavefunction(const OscillatorParams &p, int n, double x) {
  return p.b() == 0.0 ? wavefunction_gegenbauer(p, n, x)
                      : wavefunction_jacobi(p, n, x);
}

std::vector<BoundState> bound_states(const OscillatorParams &p) {
  std::vector<BoundState> states;
  const int count = num_bound_states(p);
  states.reserve(count);
  for (int n = 0; n < count; ++n)
    states.push_back(
        {n, energy(p, n), [p, n](double x) { return wavefunction(p, n, x); }});
  return states;
}

double jafarov_confinement_length(double omega0, int l) {
  if (l < 2)
    throw std::invalid_argument("jafarov_case: requires integer l >= 2 (got l = " +
                                std::to_string(l) + ")");
  if (!(omega0 > 0.0))
    throw std::invalid_argument("jafarov_case: requires omega0 > 0");
  const double ll = l;
  return std::sqrt(2.0 / omega0) * std::pow(ll * (ll + 1.0) - 2.0, 0.25);
}

JafarovModel jafarov_case(double omega0, int l) {
  const double a = jafarov_confinement_length(omega0, l);
  const double a2 = a * a;
  const double root = std::sqrt(1.0 + std::pow(3.0 / (omega0 * a2), 2));

  JafarovModel model{l, a, {}};
  for (int n = 0; n <= l - 2; ++n) {
    const int k = l - n;
    const double log_norm =
        ln_factorial(2 * k) - k * std::numbers::ln2 - ln_factorial(k) +
        0.5 * (std::log(static_cast<double>(k)) + ln_factorial(n) -
               std::log(a) - ln_factorial(2 * l - n));
    const double norm = std::exp(log_norm);
    const double h = n + 0.5;
    const double e = omega0 * root * h - h * h / a2 - 1.25 / a2;
    auto psi = [=](double x) {
      if (!(std::abs(x) <= a))
        throw std::domain_error("jafarov wavefunction: x outside [-a, a]");
      if (std::abs(x) >= (1.0 - kDomainGuard) * a)
        return 0.0;
      const double t = x / a;
      return norm * std::pow(1.0 - t * t, 0.5 * (k - 1)) *
             gegenbauer_poly(n, k + 0.5, t);
    };
    model.states.push_back({n, e, psi});
  }
  return model;
}

} // namespace pdmosc
