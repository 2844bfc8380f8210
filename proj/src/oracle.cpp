#include "pdmosc/oracle.hpp"

#include "pdmosc/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <string>

namespace pdmosc {

namespace {

double norm2(const std::vector<double> &v) {
  double s = 0.0;
  for (double x : v)
    s += x * x;
  return std::sqrt(s);
}

// Solves (T - shift I) y = rhs by Gaussian elimination with partial
// pivoting. Zero pivots are nudged to a tiny value, which is what inverse
// iteration wants at an exact eigenvalue.
class ShiftedSolver {
public:
  ShiftedSolver(const TridiagonalOperator &op, double shift) {
    const int n = op.size();
    d_.resize(n);
    du_.assign(n, 0.0);
    du2_.assign(n, 0.0);
    dl_.assign(n, 0.0);
    swap_.assign(n, false);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
      d_[i] = op.diag[i] - shift;
      scale = std::max(scale, std::abs(d_[i]));
    }
    for (int i = 0; i + 1 < n; ++i) {
      du_[i] = op.off[i];
      scale = std::max(scale, std::abs(op.off[i]));
    }
    tiny_ = std::numeric_limits<double>::epsilon() * std::max(scale, 1.0);

    // Row i has (d_[i], du_[i], du2_[i]); the subdiagonal of row i+1 is off[i].
    for (int i = 0; i + 1 < n; ++i) {
      double sub = op.off[i];
      if (std::abs(d_[i]) >= std::abs(sub)) {
        if (d_[i] == 0.0)
          d_[i] = tiny_;
        dl_[i] = sub / d_[i];
        d_[i + 1] -= dl_[i] * du_[i];
      } else {
        // swap rows i and i+1
        swap_[i] = true;
        dl_[i] = d_[i] / sub;
        d_[i] = sub;
        const double tmp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = tmp - dl_[i] * d_[i + 1];
        if (i + 2 < n) {
          du2_[i] = op.off[i + 1];
          du_[i + 1] = -dl_[i] * du2_[i];
        }
      }
    }
    if (n > 0 && d_[n - 1] == 0.0)
      d_[n - 1] = tiny_;
  }

  std::vector<double> solve(std::vector<double> b) const {
    const int n = static_cast<int>(d_.size());
    for (int i = 0; i + 1 < n; ++i) {
      if (swap_[i])
        std::swap(b[i], b[i + 1]);
      b[i + 1] -= dl_[i] * b[i];
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = b[i];
      if (i + 1 < n)
        s -= du_[i] * b[i + 1];
      if (i + 2 < n)
        s -= du2_[i] * b[i + 2];
      double piv = d_[i];
      if (std::abs(piv) < tiny_)
        piv = std::copysign(tiny_, piv == 0.0 ? 1.0 : piv);
      b[i] = s / piv;
    }
    return b;
  }

private:
  std::vector<double> d_, du_, du2_, dl_;
  std::vector<bool> swap_;
  double tiny_ = 0.0;
};

double richardson(double e_coarse, double e_fine, double h_coarse,
                  double h_fine) {
  const double c2 = h_coarse * h_coarse;
  const double f2 = h_fine * h_fine;
  return (e_fine * c2 - e_coarse * f2) / (c2 - f2);
}

// Order p such that (e1 - e2)/(e2 - e3) = (h1^p - h2^p)/(h2^p - h3^p).
double measured_order(double e1, double e2, double e3, double h1, double h2,
                      double h3) {
  const double target = (e1 - e2) / (e2 - e3);
  if (!(target > 1.0) || !std::isfinite(target))
    return std::numeric_limits<double>::quiet_NaN();
  auto ratio = [&](double p) {
    return (std::pow(h1, p) - std::pow(h2, p)) /
           (std::pow(h2, p) - std::pow(h3, p));
  };
  double lo = 1e-3, hi = 16.0;
  if (ratio(lo) > target || ratio(hi) < target)
    return std::numeric_limits<double>::quiet_NaN();
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (ratio(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SpectrumReport run_report(const std::function<double(double)> &mass,
                          const std::function<double(double)> &potential,
                          double lo, double hi, std::vector<double> analytic,
                          int n_grid, bool estimate_order) {
  const int k = static_cast<int>(analytic.size());
  SpectrumReport report;
  report.analytic = std::move(analytic);
  report.lo = lo;
  report.hi = hi;
  report.n_coarse = n_grid;
  report.n_fine = 2 * n_grid;

  const Grid1D coarse_grid(lo, hi, report.n_coarse);
  const Grid1D fine_grid(lo, hi, report.n_fine);
  report.coarse =
      eigenvalues_sturm(discretize_bdd(mass, potential, coarse_grid), k);
  report.fine = eigenvalues_sturm(discretize_bdd(mass, potential, fine_grid), k);

  for (int i = 0; i < k; ++i) {
    const double e = richardson(report.coarse[i], report.fine[i],
                                coarse_grid.spacing(), fine_grid.spacing());
    report.numeric.push_back(e);
    report.rel_err.push_back(std::abs(e - report.analytic[i]) /
                             std::max(std::abs(report.analytic[i]), 1e-300));
  }

  if (estimate_order) {
    const Grid1D third_grid(lo, hi, 4 * n_grid);
    const auto third =
        eigenvalues_sturm(discretize_bdd(mass, potential, third_grid), k);
    for (int i = 0; i < k; ++i)
      report.order.push_back(measured_order(
          report.coarse[i], report.fine[i], third[i], coarse_grid.spacing(),
          fine_grid.spacing(), third_grid.spacing()));
  }
  return report;
}

} // namespace

Grid1D::Grid1D(double lo, double hi, int n) : lo_(lo), hi_(hi), n_(n) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw std::invalid_argument("Grid1D: requires finite lo < hi");
  if (n < 3)
    throw std::invalid_argument("Grid1D: requires at least 3 interior points");
  h_ = (hi - lo) / (n + 1);
}

int TridiagonalOperator::sturm_count(double lambda) const {
  const int n = size();
  double pivmin = std::numeric_limits<double>::min();
  for (double e : off)
    pivmin = std::max(pivmin, e * e * std::numeric_limits<double>::min());
  int count = 0;
  double q = 1.0;
  for (int i = 0; i < n; ++i) {
    q = diag[i] - lambda - (i > 0 ? off[i - 1] * off[i - 1] / q : 0.0);
    if (std::abs(q) < pivmin)
      q = -pivmin;
    if (q < 0.0)
      ++count;
  }
  return count;
}

std::vector<double> TridiagonalOperator::apply(const std::vector<double> &x) const {
  const int n = size();
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    double s = diag[i] * x[i];
    if (i > 0)
      s += off[i - 1] * x[i - 1];
    if (i + 1 < n)
      s += off[i] * x[i + 1];
    y[i] = s;
  }
  return y;
}

TridiagonalOperator discretize_bdd(const std::function<double(double)> &mass,
                                   const std::function<double(double)> &potential,
                                   const Grid1D &grid) {
  const int n = grid.size();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);

  // inv_mass[j] = 1/M at x_{j-1/2}, j = 0..n
  std::vector<double> inv_mass(n + 1);
  for (int j = 0; j <= n; ++j) {
    const double x = grid.lo() + (j + 0.5) * h;
    const double m = mass(x);
    if (!std::isfinite(m) || !(m > 0.0)) {
      std::ostringstream msg;
      msg << "discretize_bdd: mass sample " << m << " at x = " << x
          << " is not finite and positive";
      throw std::invalid_argument(msg.str());
    }
    inv_mass[j] = 1.0 / m;
  }

  TridiagonalOperator op;
  op.diag.resize(n);
  op.off.resize(n - 1);
  for (int i = 0; i < n; ++i) {
    const double x = grid.node(i);
    const double v = potential(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "discretize_bdd: potential sample at x = " << x << " is not finite";
      throw std::invalid_argument(msg.str());
    }
    op.diag[i] = (inv_mass[i] + inv_mass[i + 1]) * inv_h2 + v;
    if (i + 1 < n)
      op.off[i] = -inv_mass[i + 1] * inv_h2;
  }
  return op;
}

std::vector<double> eigenvalues_sturm(const TridiagonalOperator &op, int k) {
  const int n = op.size();
  if (k < 1 || k > n)
    throw std::out_of_range("eigenvalues_sturm: k = " + std::to_string(k) +
                            " outside 1.." + std::to_string(n));

  double glo = std::numeric_limits<double>::infinity();
  double ghi = -glo;
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(op.off[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(op.off[i]) : 0.0);
    glo = std::min(glo, op.diag[i] - r);
    ghi = std::max(ghi, op.diag[i] + r);
  }
  const double pad = 1e-12 * std::max({1.0, std::abs(glo), std::abs(ghi)});
  glo -= pad;
  ghi += pad;

  std::vector<double> values(k);
  double floor = glo;
  for (int j = 0; j < k; ++j) {
    // Smallest lambda with more than j eigenvalues below it.
    double lo = floor, hi = ghi;
    while (true) {
      const double mid = 0.5 * (lo + hi);
      if (hi - lo <= 1e-12 * std::max(1.0, std::abs(mid)) || mid <= lo ||
          mid >= hi)
        break;
      (op.sturm_count(mid) > j ? hi : lo) = mid;
    }
    values[j] = 0.5 * (lo + hi);
    floor = lo;
  }
  return values;
}

std::vector<double> eigenvector(const TridiagonalOperator &op, double lambda,
                                double h) {
  const int n = op.size();
  if (n == 0)
    throw std::invalid_argument("eigenvector: empty operator");
  const ShiftedSolver solver(op, lambda);

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  std::vector<double> v(n);
  for (double &x : v)
    x = dist(rng);

  double residual = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 5; ++iter) {
    v = solver.solve(std::move(v));
    const double nv = norm2(v);
    if (!(nv > 0.0) || !std::isfinite(nv))
      throw ConvergenceError("eigenvector: inverse iteration broke down");
    for (double &x : v)
      x /= nv;
    auto r = op.apply(v);
    for (int i = 0; i < n; ++i)
      r[i] -= lambda * v[i];
    residual = norm2(r);
    if (residual <= 1e-8)
      break;
  }
  if (!(residual <= 1e-8)) {
    std::ostringstream msg;
    msg << "eigenvector: residual " << residual
        << " above 1e-8 after 5 inverse iterations at lambda = " << lambda;
    throw ConvergenceError(msg.str());
  }

  double vmax = 0.0;
  for (double x : v)
    vmax = std::max(vmax, std::abs(x));
  const auto lead = std::find_if(v.begin(), v.end(), [&](double x) {
    return std::abs(x) >= 1e-8 * vmax;
  });
  const double scale = (*lead < 0.0 ? -1.0 : 1.0) / std::sqrt(h);
  for (double &x : v)
    x *= scale;
  return v;
}

double SpectrumReport::max_rel_err() const {
  double m = 0.0;
  for (double e : rel_err)
    m = std::max(m, e);
  return m;
}

SpectrumReport solve_pdm_numeric(const OscillatorParams &p, int k, int n_grid,
                                 bool estimate_order) {
  const int available = num_bound_states(p);
  if (k < 1 || k > available)
    throw std::out_of_range("solve_pdm_numeric: k = " + std::to_string(k) +
                            " but the model has " + std::to_string(available) +
                            " bound states");
  std::vector<double> analytic;
  for (int n = 0; n < k; ++n)
    analytic.push_back(energy(p, n));

  const double a = p.a();
  auto mass_fn = [a](double x) {
    const double s = 1.0 - (x / a) * (x / a);
    return 1.0 / (s * s);
  };
  auto potential_fn = [p](double x) { return p.potential(x); };
  return run_report(mass_fn, potential_fn, -a, a, std::move(analytic), n_grid,
                    estimate_order);
}

SpectrumReport solve_constant_mass_numeric(const RosenMorseParams &p, double box,
                                           int k, int n_grid,
                                           bool estimate_order) {
  const auto nmax = rm_nmax(p);
  const int available = nmax ? *nmax + 1 : 0;
  if (k < 1 || k > available)
    throw std::out_of_range("solve_constant_mass_numeric: k = " +
                            std::to_string(k) + " but the potential has " +
                            std::to_string(available) + " bound states");
  if (!(box > 0.0))
    throw std::invalid_argument("solve_constant_mass_numeric: box must be positive");

  std::vector<double> analytic;
  for (int n = 0; n < k; ++n) {
    for (double edge : {-box, box}) {
      const double phi = rm_wavefunction(p, n, edge);
      if (!(phi * phi < 1e-10)) {
        std::ostringstream msg;
        msg << "solve_constant_mass_numeric: box " << box
            << " too small, |phi_" << n << "(" << edge << ")|^2 = " << phi * phi;
        throw std::invalid_argument(msg.str());
      }
    }
    analytic.push_back(rm_energy(p, n));
  }
  auto unit_mass = [](double) { return 1.0; };
  auto potential_fn = [p](double u) { return rm_potential(p, u); };
  return run_report(unit_mass, potential_fn, -box, box, std::move(analytic),
                    n_grid, estimate_order);
}

double overlap(const std::function<double(double)> &f,
               const std::function<double(double)> &g, double lo, double hi,
               int rule_size) {
  // x = lo + (hi - lo) w(s), w(s) = s^4 / (s^4 + (1 - s)^4); w' vanishes to
  // third order at both ends, so weak endpoint singularities of f g are smoothed out
  const QuadratureRule rule = gauss_legendre(rule_size);
  const double width = hi - lo;
  return rule.integrate(
      [&](double s) {
        const double p = s * s * s * s;
        const double q = (1.0 - s) * (1.0 - s) * (1.0 - s) * (1.0 - s);
        const double den = p + q;
        const double x = s < 0.5 ? lo + width * p / den : hi - width * q / den;
        // offset below one ulp; the node's weight is negligible
        if (x == lo || x == hi)
          return 0.0;
        const double dw = 4.0 * s * s * s * (1.0 - s) * (1.0 - s) * (1.0 - s) / (den * den);
        return f(x) * g(x) * width * dw;
      },
      0.0, 1.0);
}

int count_sign_changes(const std::vector<double> &values, double tol) {
  double vmax = 0.0;
  for (double v : values)
    vmax = std::max(vmax, std::abs(v));
  const double cut = tol * vmax;
  int changes = 0;
  int last = 0;
  for (double v : values) {
    if (std::abs(v) <= cut)
      continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

} // namespace pdmosc
