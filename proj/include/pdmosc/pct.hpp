#pragma once

#include "pdmosc/rosen_morse.hpp"

#include <functional>

namespace pdmosc {

/// Mass profile M(x) = (1 - x^2/a^2)^{-2} on (-a, a).
struct MassProfile {
  explicit MassProfile(double half_width);
  double a;
};

/// Constants of the point canonical transformation u = a_bar v(x) + b_bar,
/// E = a_bar^2 eps + c_bar. b_bar is always 0.
struct PctMap {
  double a_bar;
  double b_bar = 0.0;
  double c_bar;
};

/// Everything derived from (omega0, A, b).
struct ModelMap {
  double a;
  PctMap map;
  RosenMorseParams source;
};

/// x-space operations accept |x| <= (1 - kDomainGuard) a.
inline constexpr double kDomainGuard = 1e-12;

double mass(const MassProfile &profile, double x);

/// v(x) = a artanh(x/a), the antiderivative of sqrt(M).
double v_of_x(const MassProfile &profile, double x);

/// u(x) = a_bar v(x) + b_bar.
double u_of_x(const MassProfile &profile, const PctMap &map, double x);

/// M''/(4M^2) - 7M'^2/(16M^3) in closed form: -2x^2/a^4 + 1/a^2.
double mass_correction(const MassProfile &profile, double x);

/// a_bar^2 U(u(x)) + mass_correction(x) + c_bar.
double transform_potential(const std::function<double(double)> &source_potential,
                           const MassProfile &profile, const PctMap &map,
                           double x);

double transform_energy(const PctMap &map, double epsilon);

/// Maps oscillator parameters onto the Rosen-Morse source problem:
///   a = sqrt(2/omega0) [A(A+1) - 2]^{1/4},  a_bar = 1/a,  b_bar = 0,
///   c_bar = omega0^2 a^2 / 4 + 1/a^2 + b^2,  B = -omega0 a^3 b / 2.
/// Throws std::invalid_argument for omega0 <= 0, A <= 1 or |b| at or beyond
/// shift_bound(omega0, A).
ModelMap map_parameters(double omega0, double A, double b);

} // namespace pdmosc
