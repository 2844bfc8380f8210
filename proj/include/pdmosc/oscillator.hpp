#pragma once

#include "pdmosc/pct.hpp"

#include <functional>
#include <vector>

namespace pdmosc {

/// a = sqrt(2/omega0) [A(A+1) - 2]^{1/4}; requires A > 1.
double confinement_length(double omega0, double A);

/// Largest admissible |b|: sqrt(omega0/2) A(A-1) / [A(A+1) - 2]^{3/4}.
double shift_bound(double omega0, double A);

/// Confined position-dependent-mass oscillator with potential
/// omega0^2 (x - 2b/omega0)^2 / 4 on (-a, a). All derived constants come
/// from map_parameters.
class OscillatorParams {
public:
  OscillatorParams(double omega0, double A, double b = 0.0);

  double omega0() const { return omega0_; }
  double A() const { return A_; }
  double b() const { return b_; }
  double a() const { return derived_.a; }
  const PctMap &map() const { return derived_.map; }
  const RosenMorseParams &source() const { return derived_.source; }
  MassProfile profile() const { return MassProfile(derived_.a); }

  /// V_eff(x) = omega0^2 (x - 2b/omega0)^2 / 4.
  double potential(double x) const;

private:
  double omega0_;
  double A_;
  double b_;
  ModelMap derived_;
};

struct BoundState {
  int n;
  double energy;
  std::function<double(double)> wavefunction;
};

/// Number of admitted states: n < A - 1 for b = 0, otherwise
/// n < A - (1 + sqrt(1 + 2 omega0 a^3 |b|)) / 2.
int num_bound_states(const OscillatorParams &p);

/// E_n = a_bar^2 eps_n + c_bar. Throws std::out_of_range outside the window.
double energy(const OscillatorParams &p, int n);

/// -(A-n)^2/a^2 + omega0^2 a^2/4 + 1/a^2. Unshifted models only.
double energy_direct_form(const OscillatorParams &p, int n);

/// The (n + 1/2)-expanded form, including the b^2 g(n)/f(n) shift term.
double energy_expanded_form(const OscillatorParams &p, int n);

/// Normalized psi_n(x). Gegenbauer form for b = 0, Jacobi form otherwise.
/// Returns 0 within kDomainGuard*a of the walls; throws std::domain_error
/// for |x| > a.
double wavefunction(const OscillatorParams &p, int n, double x);
double wavefunction_jacobi(const OscillatorParams &p, int n, double x);
double wavefunction_gegenbauer(const OscillatorParams &p, int n, double x);

/// All admitted states in increasing n.
std::vector<BoundState> bound_states(const OscillatorParams &p);

/// Quantized-confinement model at integer A = l, evaluated from its own
/// closed forms (factorial normalization, sqrt(1 + (3/(omega0 a^2))^2)
/// energies).
struct JafarovModel {
  int l;
  double a;
  std::vector<BoundState> states;
};

double jafarov_confinement_length(double omega0, int l);
JafarovModel jafarov_case(double omega0, int l);

} // namespace pdmosc
