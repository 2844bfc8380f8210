#pragma once

#include "pdmosc/oscillator.hpp"
#include "pdmosc/rosen_morse.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pdmosc {

/// Raised when an iterative numerical method fails to converge.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Uniform interior grid on (lo, hi): x_i = lo + (i+1) h, i = 0..n-1,
/// h = (hi - lo)/(n + 1). Dirichlet values live at lo and hi.
class Grid1D {
public:
  Grid1D(double lo, double hi, int n);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  int size() const { return n_; }
  double spacing() const { return h_; }
  double node(int i) const { return lo_ + (i + 1) * h_; }

private:
  double lo_;
  double hi_;
  int n_;
  double h_;
};

/// Symmetric tridiagonal matrix.
struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> off;

  int size() const { return static_cast<int>(diag.size()); }

  /// Number of eigenvalues strictly below lambda.
  int sturm_count(double lambda) const;

  /// y = T x.
  std::vector<double> apply(const std::vector<double> &x) const;
};

/// Half-grid discretization of -d/dx (1/M) d/dx + V with Dirichlet ends:
///   diag_i = [(1/M)_{i-1/2} + (1/M)_{i+1/2}] / h^2 + V(x_i),
///   off_i  = -(1/M)_{i+1/2} / h^2.
TridiagonalOperator discretize_bdd(const std::function<double(double)> &mass,
                                   const std::function<double(double)> &potential,
                                   const Grid1D &grid);

/// k smallest eigenvalues by Sturm-sequence bisection inside the
/// Gershgorin interval.
std::vector<double> eigenvalues_sturm(const TridiagonalOperator &op, int k);

/// Inverse iteration at a converged eigenvalue; result normalized so that
/// sum v_i^2 h = 1, with the first significant entry positive.
/// Throws ConvergenceError if the residual stays above 1e-8 |v| after
/// five sweeps.
std::vector<double> eigenvector(const TridiagonalOperator &op, double lambda,
                                double h = 1.0);

struct SpectrumReport {
  std::vector<double> analytic;
  std::vector<double> numeric;     // Richardson-extrapolated
  std::vector<double> rel_err;
  std::vector<double> coarse;      // raw eigenvalues at n_grid
  std::vector<double> fine;        // raw eigenvalues at 2 n_grid
  std::vector<double> order;       // per-level measured order (empty unless requested)
  double lo = 0.0;
  double hi = 0.0;
  int n_coarse = 0;
  int n_fine = 0;

  double max_rel_err() const;
};

/// Analytic vs finite-difference spectrum of the confined PDM oscillator on
/// (-a, a). With estimate_order, a third grid of 4 n_grid points measures
/// the convergence order of each level.
SpectrumReport solve_pdm_numeric(const OscillatorParams &p, int k, int n_grid,
                                 bool estimate_order = false);

/// Same for the constant-mass Rosen-Morse problem on (-box, box). Throws
/// std::invalid_argument when some requested state has boundary density
/// |phi_n(+-box)|^2 >= 1e-10.
SpectrumReport solve_constant_mass_numeric(const RosenMorseParams &p, double box,
                                           int k, int n_grid,
                                           bool estimate_order = false);

/// Integral of f g over (lo, hi) by Gauss-Legendre after an endpoint-clustering
/// substitution. Tolerates integrable power-law behaviour at either end.
double overlap(const std::function<double(double)> &f,
               const std::function<double(double)> &g, double lo, double hi,
               int rule_size);

/// Number of sign changes in a sampled sequence, ignoring entries with
/// magnitude below tol * max|v|.
int count_sign_changes(const std::vector<double> &values, double tol = 1e-10);

} // namespace pdmosc
