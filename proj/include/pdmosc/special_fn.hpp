#pragma once

#include <vector>

namespace pdmosc {

/// Gauss-Legendre rule on [-1, 1]. Nodes are increasing and symmetric about 0.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  /// Integrates f over [lo, hi] by affine mapping of the rule.
  template <typename F>
  double integrate(F &&f, double lo, double hi) const {
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      sum += weights[i] * f(mid + half * nodes[i]);
    return half * sum;
  }
};

/// Jacobi polynomial P_n^{(alpha,beta)}(z) by forward three-term recurrence.
/// Requires alpha, beta > -1 and finite arguments.
double jacobi_poly(int n, double alpha, double beta, double z);

/// Gegenbauer polynomial C_n^{(lambda)}(z); lambda > -1/2, lambda != 0.
double gegenbauer_poly(int n, double lambda, double z);

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// n-point Gauss-Legendre rule (n >= 1).
QuadratureRule gauss_legendre(int n);

} // namespace pdmosc
