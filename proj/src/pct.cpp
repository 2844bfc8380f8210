#include "pdmosc/pct.hpp"

#include "pdmosc/oscillator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pdmosc {

namespace {

void check_domain(const MassProfile &profile, double x, const char *op) {
  if (!(std::abs(x) <= (1.0 - kDomainGuard) * profile.a)) {
    std::ostringstream msg;
    msg << op << ": x = " << x << " outside the open interval (-" << profile.a
        << ", " << profile.a << ")";
    throw std::domain_error(msg.str());
  }
}

} // namespace

MassProfile::MassProfile(double half_width) : a(half_width) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw std::invalid_argument("MassProfile: half-width must be positive");
}

double mass(const MassProfile &profile, double x) {
  check_domain(profile, x, "mass");
  const double s = 1.0 - (x / profile.a) * (x / profile.a);
  return 1.0 / (s * s);
}

double v_of_x(const MassProfile &profile, double x) {
  check_domain(profile, x, "v_of_x");
  return profile.a * std::atanh(x / profile.a);
}

double u_of_x(const MassProfile &profile, const PctMap &map, double x) {
  return map.a_bar * v_of_x(profile, x) + map.b_bar;
}

double mass_correction(const MassProfile &profile, double x) {
  check_domain(profile, x, "mass_correction");
  const double a2 = profile.a * profile.a;
  return -2.0 * x * x / (a2 * a2) + 1.0 / a2;
}

double transform_potential(const std::function<double(double)> &source_potential,
                           const MassProfile &profile, const PctMap &map,
                           double x) {
  const double u = u_of_x(profile, map, x);
  return map.a_bar * map.a_bar * source_potential(u) +
         mass_correction(profile, x) + map.c_bar;
}

double transform_energy(const PctMap &map, double epsilon) {
  return map.a_bar * map.a_bar * epsilon + map.c_bar;
}

ModelMap map_parameters(double omega0, double A, double b) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0))
    throw std::invalid_argument("map_parameters: requires omega0 > 0");
  if (!std::isfinite(b))
    throw std::invalid_argument("map_parameters: b must be finite");
  const double a = confinement_length(omega0, A);
  const double bound = shift_bound(omega0, A);
  if (!(std::abs(b) < bound - kDomainGuard)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "map_parameters: |b| = " << std::abs(b)
        << " violates the shift bound |b| < " << bound;
    throw std::invalid_argument(msg.str());
  }
  PctMap map{.a_bar = 1.0 / a,
             .b_bar = 0.0,
             .c_bar = 0.25 * omega0 * omega0 * a * a + 1.0 / (a * a) + b * b};
  const double B = b == 0.0 ? 0.0 : -0.5 * omega0 * a * a * a * b;
  return ModelMap{a, map, RosenMorseParams(A, B)};
}

} // namespace pdmosc
