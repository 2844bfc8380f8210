#pragma once

#include <optional>

namespace pdmosc {

/// Parameters of the hyperbolic Rosen-Morse potential
///   U(u) = -A(A+1) sech^2 u + 2B tanh u,  -inf < u < inf.
/// Construction enforces A > 0, B < A^2 and keeps A - sqrt|B| at least
/// 1e-12 away from a non-negative integer (zero-norm threshold state).
class RosenMorseParams {
public:
  RosenMorseParams(double A, double B);

  double A() const { return A_; }
  double B() const { return B_; }

private:
  double A_;
  double B_;
};

double rm_potential(const RosenMorseParams &p, double u);

/// Largest n with n < A - sqrt|B|, or nullopt when there is no bound state.
std::optional<int> rm_nmax(const RosenMorseParams &p);

/// Bound-state energy eps_n = -(A-n)^2 - B^2/(A-n)^2. Throws std::out_of_range
/// outside 0..rm_nmax.
double rm_energy(const RosenMorseParams &p, int n);

/// Jacobi exponents (alpha, beta) of state n: A-n +/- B/(A-n).
struct JacobiExponents {
  double alpha;
  double beta;
};
JacobiExponents rm_exponents(const RosenMorseParams &p, int n);

/// ln of the normalization coefficient of state n (Jacobi form).
double rm_log_norm(const RosenMorseParams &p, int n);

/// Normalized phi_n(u) through the Jacobi-polynomial form.
double rm_wavefunction(const RosenMorseParams &p, int n, double u);

/// Normalized phi_n(u) at B = 0 through the Gegenbauer form
///   c_n sech^{A-n}(u) C_n^{(A-n+1/2)}(tanh u).
/// Throws std::invalid_argument when B != 0.
double rm_wavefunction_gegenbauer(const RosenMorseParams &p, int n, double u);

/// Quadrature of |phi_n|^2 over the truncated line |u| <= cutoff.
double rm_norm_integral(const RosenMorseParams &p, int n, double cutoff = 30.0);

} // namespace pdmosc
