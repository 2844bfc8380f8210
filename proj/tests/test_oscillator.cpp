#include "pdmosc/oracle.hpp"
#include "pdmosc/oscillator.hpp"
#include "reference.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace pdmosc;
namespace ref = pdmosc::reference;

namespace {

struct Config {
  double omega0, A, b;
};

const std::vector<Config> kGrid = {{1, 2, 0},   {1, 3, 0},    {1, 5, 0},
                                   {1, 3, 0.1}, {1, 4, -0.3}, {1, 2.6, 0},
                                   {2, 3.8, 0.25}, {0.5, 5.9, -0.05}};

// Boundary exponent of psi_n at the wall where it is smallest.
double wall_exponent(const OscillatorParams &p, int n) {
  const double k = p.A() - n;
  const double s = p.omega0() * std::pow(p.a(), 3) * std::abs(p.b()) / (2.0 * k);
  return 0.5 * (k - 1.0 - s);
}

} // namespace

TEST_CASE("confinement_length") {
  CHECK(confinement_length(1.0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(confinement_length(1.0, 3.0) ==
        doctest::Approx(std::pow(40.0, 0.25)).epsilon(1e-15));
  for (int l = 2; l <= 8; ++l)
    CHECK(confinement_length(1.3, l) == jafarov_confinement_length(1.3, l));
  CHECK_THROWS_AS(confinement_length(1.0, 1.0), std::invalid_argument);
}

TEST_CASE("shift_bound") {
  CHECK(shift_bound(1.0, 3.0) == doctest::Approx(0.75446005780976124).epsilon(1e-14));
  CHECK(shift_bound(1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  // vanishes like (A - 1)^(1/4) at threshold
  for (double eps : {1e-4, 1e-8, 1e-12})
    CHECK(shift_bound(1.0, 1.0 + eps) / std::pow(eps, 0.25) ==
          doctest::Approx(std::sqrt(0.5) / std::pow(3.0, 0.75)).epsilon(1e-3));
  CHECK_THROWS_AS(shift_bound(1.0, 0.9), std::invalid_argument);
}

TEST_CASE("OscillatorParams: derived constants match map_parameters") {
  for (const auto &c : kGrid) {
    const OscillatorParams p(c.omega0, c.A, c.b);
    const auto m = map_parameters(c.omega0, c.A, c.b);
    CHECK(p.a() == m.a);
    CHECK(p.map().a_bar == m.map.a_bar);
    CHECK(p.map().c_bar == m.map.c_bar);
    CHECK(p.source().B() == m.source.B());
  }
  CHECK_THROWS_AS(OscillatorParams(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(OscillatorParams(1.0, 3.0, 0.76), std::invalid_argument);
}

TEST_CASE("num_bound_states") {
  CHECK(num_bound_states({1.0, 2.0, 0.0}) == 1);
  CHECK(num_bound_states({1.0, 3.0, 0.0}) == 2);
  CHECK(num_bound_states({1.0, 3.0, 0.1}) == 2);
  CHECK(num_bound_states({1.0, 1.01, 0.0}) == 1);
  CHECK(num_bound_states({1.0, 2.01, 0.0}) == 2);
  CHECK(num_bound_states({1.0, 3.0, 0.75}) == 1);
  // x-space window is never wider than the u-space window
  for (const auto &c : kGrid) {
    const OscillatorParams p(c.omega0, c.A, c.b);
    CHECK(num_bound_states(p) <= *rm_nmax(p.source()) + 1);
  }
}

TEST_CASE("energy: frozen values") {
  CHECK(energy({1.0, 2.0, 0.0}, 0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(energy({1.0, 3.0, 0.0}, 0) ==
        doctest::Approx(0.31622776601683793).epsilon(1e-14));
  CHECK(energy({1.0, 3.0, 0.0}, 1) ==
        doctest::Approx(1.1067971810589328).epsilon(1e-14));
  CHECK(energy({1.0, 3.0, 0.1}, 0) ==
        doctest::Approx(0.31511665490572682).epsilon(1e-14));
  CHECK(energy({1.0, 3.0, 0.1}, 1) ==
        doctest::Approx(1.0917971810589328).epsilon(1e-14));
  CHECK_THROWS_AS(energy({1.0, 3.0, 0.0}, 2), std::out_of_range);
  CHECK_THROWS_AS(energy({1.0, 3.0, 0.0}, -1), std::out_of_range);
}

TEST_CASE("energy: the printed forms agree with the PCT route") {
  for (const auto &c : kGrid) {
    const OscillatorParams p(c.omega0, c.A, c.b);
    for (int n = 0; n < num_bound_states(p); ++n) {
      const double e = energy(p, n);
      CHECK(ref::rel_diff(energy_expanded_form(p, n), e) < 1e-12);
      if (c.b == 0.0)
        CHECK(ref::rel_diff(energy_direct_form(p, n), e) < 1e-12);
      else
        CHECK_THROWS_AS(energy_direct_form(p, n), std::invalid_argument);
      if (n > 0)
        CHECK(e > energy(p, n - 1));
    }
  }
}

TEST_CASE("energy: shift lowers E_0 by b^2/9 at A = 3") {
  const double e0 = energy({1.0, 3.0, 0.0}, 0);
  CHECK(energy({1.0, 3.0, 0.1}, 0) - e0 == doctest::Approx(-0.01 / 9.0).epsilon(1e-10));
  CHECK(energy({1.0, 3.0, 0.1}, 1) - energy({1.0, 3.0, 0.0}, 1) ==
        doctest::Approx(-0.015).epsilon(1e-10));
}

TEST_CASE("energy: ordering and dependence on A and b (property)") {
  for (int trial = 0; trial < 200; ++trial) {
    const double omega0 = ref::uniform(0.3, 3.0);
    const double A = ref::uniform(1.2, 8.0);
    const OscillatorParams flat(omega0, A, 0.0);
    const OscillatorParams deeper(omega0, A + 0.05, 0.0);
    const int count = num_bound_states(flat);
    for (int n = 0; n < count; ++n) {
      CHECK(energy(flat, n) > 0.0);
      if (n > 0)
        CHECK(energy(flat, n) > energy(flat, n - 1));
      CHECK(energy(deeper, n) > energy(flat, n));
    }

    // the shift enters as b^2 with the sign of (A - n)^2 - (A^2 + A - 2)
    const double b = ref::uniform(-0.9, 0.9) * shift_bound(omega0, A);
    const OscillatorParams full(omega0, A, b);
    const OscillatorParams half(omega0, A, 0.5 * b);
    for (int n = 0; n < num_bound_states(full); ++n) {
      const double d_full = energy(full, n) - energy(flat, n);
      const double d_half = energy(half, n) - energy(flat, n);
      const double g = (A - n) * (A - n) - (A * A + A - 2.0);
      CHECK(d_full == doctest::Approx(4.0 * d_half).epsilon(1e-6));
      CHECK((d_full < 0.0) == (g < 0.0));
    }
  }
}

TEST_CASE("energy: harmonic limit") {
  const OscillatorParams p(1.0, 1e4, 0.0);
  for (int n = 0; n <= 3; ++n)
    CHECK(std::abs(energy(p, n) - (n + 0.5)) / (n + 0.5) < 0.01);
}

TEST_CASE("wavefunction: point values and domain") {
  CHECK(wavefunction({1.0, 2.0, 0.0}, 0, 0.0) ==
        doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-14));
  CHECK(std::abs(wavefunction({1.0, 3.0, 0.0}, 1, 0.0)) < 1e-15);
  const OscillatorParams p(1.0, 3.0, 0.1);
  CHECK(wavefunction(p, 0, p.a()) == 0.0);
  CHECK(wavefunction(p, 0, -p.a()) == 0.0);
  CHECK(wavefunction(p, 1, p.a() * (1.0 - 1e-13)) == 0.0);
  CHECK_THROWS_AS(wavefunction(p, 0, 1.01 * p.a()), std::domain_error);
  CHECK_THROWS_AS(wavefunction(p, 2, 0.0), std::out_of_range);
}

TEST_CASE("wavefunction: Gegenbauer and Jacobi routes agree at b = 0") {
  for (double A : {2.0, 3.0, 2.6, 5.9}) {
    const OscillatorParams p(1.0, A, 0.0);
    for (int n = 0; n < num_bound_states(p); ++n)
      for (int trial = 0; trial < 60; ++trial) {
        const double x = ref::uniform(-0.999, 0.999) * p.a();
        const double g = wavefunction_gegenbauer(p, n, x);
        const double j = wavefunction_jacobi(p, n, x);
        CHECK(std::abs(g - j) <= 1e-11 * std::max(1.0, std::abs(g)));
      }
  }
}

TEST_CASE("wavefunction: normalization integral for the A = 2 ground state") {
  // psi_0 = N sqrt(1 - x^2/4); int (1 - x^2/4) dx over (-2, 2) = 8/3
  const double n_sq = 1.0 / ref::simpson([](double x) { return 1.0 - x * x / 4.0; },
                                         -2.0, 2.0, 2);
  CHECK(n_sq == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("wavefunction: orthonormality on (-a, a)") {
  for (const auto &c : kGrid) {
    const OscillatorParams p(c.omega0, c.A, c.b);
    const int count = num_bound_states(p);
    for (int m = 0; m < count; ++m)
      for (int n = 0; n <= m; ++n) {
        const double s = overlap([&](double x) { return wavefunction(p, m, x); },
                                 [&](double x) { return wavefunction(p, n, x); },
                                 -p.a(), p.a(), 200);
        CHECK(std::abs(s - (m == n ? 1.0 : 0.0)) < 1e-8);
      }
  }
}

TEST_CASE("wavefunction: node counts") {
  for (const auto &c : kGrid) {
    const OscillatorParams p(c.omega0, c.A, c.b);
    for (int n = 0; n < num_bound_states(p); ++n) {
      std::vector<double> samples;
      for (int i = 1; i < 4000; ++i)
        samples.push_back(wavefunction(p, n, p.a() * (-1.0 + 2.0 * i / 4000)));
      CHECK(count_sign_changes(samples) == n);
    }
  }
}

TEST_CASE("wavefunction: boundary decay exponent") {
  for (const auto &c : kGrid) {
    const OscillatorParams p(c.omega0, c.A, c.b);
    for (int n = 0; n < num_bound_states(p); ++n) {
      const double k = p.A() - n;
      const double s = p.omega0() * std::pow(p.a(), 3) * p.b() / (2.0 * k);
      // psi ~ (1 - x/a)^{(k-1-s)/2} at +a and (1 + x/a)^{(k-1+s)/2} at -a
      for (int side : {+1, -1}) {
        const double expected = 0.5 * (k - 1.0 - side * s);
        const double d1 = 1e-6, d2 = 1e-7;
        const double y1 = std::abs(wavefunction(p, n, side * p.a() * (1.0 - d1)));
        const double y2 = std::abs(wavefunction(p, n, side * p.a() * (1.0 - d2)));
        const double slope = std::log(y1 / y2) / std::log(d1 / d2);
        CHECK(std::abs(slope - expected) <= 0.02 * expected);
      }
      CHECK(wall_exponent(p, n) > 0.0);
    }
  }
}

TEST_CASE("shifted potential minimum") {
  for (const auto &c : kGrid) {
    const OscillatorParams p(c.omega0, c.A, c.b);
    const double x0 = 2.0 * c.b / c.omega0;
    CHECK(std::abs(p.potential(x0)) < 1e-12);
    CHECK(p.potential(x0 + 0.01) > 0.0);
    CHECK(p.potential(x0 - 0.01) > 0.0);
  }
}

TEST_CASE("bound_states bundles energies and wavefunctions") {
  const OscillatorParams p(1.0, 3.0, 0.1);
  const auto states = bound_states(p);
  REQUIRE(states.size() == 2);
  for (const auto &s : states) {
    CHECK(s.energy == energy(p, s.n));
    CHECK(s.wavefunction(0.3) == wavefunction(p, s.n, 0.3));
  }
}

TEST_CASE("jafarov_case: quantized special case") {
  const auto l2 = jafarov_case(1.0, 2);
  CHECK(l2.a == doctest::Approx(2.0).epsilon(1e-15));
  REQUIRE(l2.states.size() == 1);
  CHECK(l2.states[0].energy == doctest::Approx(0.25).epsilon(1e-14));
  // (5/4)(1/2) - 1/16 - 5/16
  CHECK(l2.states[0].energy == doctest::Approx(1.25 * 0.5 - 1.0 / 16 - 5.0 / 16).epsilon(1e-15));

  for (double omega0 : {1.0, 0.4, 2.3})
    for (int l = 2; l <= 8; ++l) {
      const auto model = jafarov_case(omega0, l);
      const OscillatorParams p(omega0, l, 0.0);
      REQUIRE(static_cast<int>(model.states.size()) == l - 1);
      REQUIRE(num_bound_states(p) == l - 1);
      CHECK(model.a == p.a());
      for (const auto &s : model.states) {
        CHECK(ref::rel_diff(s.energy, energy(p, s.n)) < 1e-12);
        for (double t : {-0.9, -0.31, 0.0, 0.47, 0.88}) {
          const double general = wavefunction(p, s.n, t * p.a());
          CHECK(std::abs(s.wavefunction(t * p.a()) - general) <=
                1e-12 * std::max(1.0, std::abs(general)));
        }
      }
    }
  CHECK_THROWS_AS(jafarov_case(1.0, 1), std::invalid_argument);
}
