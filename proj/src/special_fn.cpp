#include "pdmosc/special_fn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pdmosc {

namespace {

void require_finite(double v, const char *what) {
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string(what) + " must be finite");
}

} // namespace

double jacobi_poly(int n, double alpha, double beta, double z) {
  if (n < 0)
    throw std::invalid_argument("jacobi_poly: degree must be non-negative");
  require_finite(alpha, "jacobi_poly: alpha");
  require_finite(beta, "jacobi_poly: beta");
  require_finite(z, "jacobi_poly: z");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::invalid_argument("jacobi_poly: alpha and beta must exceed -1");

  if (n == 0)
    return 1.0;
  const double ab = alpha + beta;
  double p_prev = 1.0;
  double p = (alpha + 1.0) + 0.5 * (ab + 2.0) * (z - 1.0);
  const double a2b2 = alpha * alpha - beta * beta;
  for (int k = 1; k < n; ++k) {
    const double c = 2.0 * k + ab;
    const double lead = 2.0 * (k + 1) * (k + ab + 1.0) * c;
    const double mid = (c + 1.0) * (c * (c + 2.0) * z + a2b2);
    const double tail = 2.0 * (k + alpha) * (k + beta) * (c + 2.0);
    const double next = (mid * p - tail * p_prev) / lead;
    p_prev = p;
    p = next;
  }
  return p;
}

double gegenbauer_poly(int n, double lambda, double z) {
  if (n < 0)
    throw std::invalid_argument("gegenbauer_poly: degree must be non-negative");
  require_finite(lambda, "gegenbauer_poly: lambda");
  require_finite(z, "gegenbauer_poly: z");
  if (lambda == 0.0)
    throw std::invalid_argument("gegenbauer_poly: lambda = 0 is degenerate");
  if (lambda <= -0.5)
    throw std::invalid_argument("gegenbauer_poly: lambda must exceed -1/2");

  if (n == 0)
    return 1.0;
  double c_prev = 1.0;
  double c = 2.0 * lambda * z;
  for (int k = 1; k < n; ++k) {
    const double next =
        (2.0 * (k + lambda) * z * c - (k + 2.0 * lambda - 1.0) * c_prev) /
        (k + 1);
    c_prev = c;
    c = next;
  }
  return c;
}

double ln_gamma(double x) {
  require_finite(x, "ln_gamma: x");
  if (x <= 0.0)
    throw std::domain_error("ln_gamma: argument must be positive");
  return std::lgamma(x);
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1)
    throw std::invalid_argument("gauss_legendre: need at least one point");

  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Chebyshev-angle start, converges to the i-th largest root.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double deriv = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = 1.0, p0 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p0;
        p0 = p1;
        p1 = ((2.0 * j - 1.0) * z * p0 - (j - 1.0) * p2) / j;
      }
      deriv = n * (z * p1 - p0) / (z * z - 1.0);
      const double step = p1 / deriv;
      z -= step;
      if (std::abs(step) <= 1e-15)
        break;
    }
    // Weight from the converged root.
    {
      double p1 = 1.0, p0 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p0;
        p0 = p1;
        p1 = ((2.0 * j - 1.0) * z * p0 - (j - 1.0) * p2) / j;
      }
      deriv = n * (z * p1 - p0) / (z * z - 1.0);
    }
    const double w = 2.0 / ((1.0 - z * z) * deriv * deriv);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1)
    rule.nodes[n / 2] = 0.0;
  return rule;
}

} // namespace pdmosc
