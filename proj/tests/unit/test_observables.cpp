#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "csswg/observables.hpp"
#include "csswg/quadrature.hpp"
#include "csswg/reduction.hpp"

using namespace csswg;

namespace {

constexpr double kPi = std::numbers::pi;

Field1D phased_profile(const Grid1D& g, double shift, double k, double width) {
  Field1D f = sample<cplx>(g, [=](double x) {
    return std::exp(-0.5 * (x - shift) * (x - shift) / (width * width)) * std::polar(1.0, k * x);
  });
  f *= cplx(1.0 / l2_norm(f), 0.0);
  return f;
}

}  // namespace

TEST(Energy1D, OscillatorAndQuinticGaussian) {
  const Grid1D g(256, 10.0);
  const Field1D phi = oscillator_ground_state(g);
  EXPECT_NEAR(energy_1d(phi, Params1D{0.0, 0.0, true, 1e-3, 0.0}), 1.0, 1e-12);
  // int phi0^6 = pi^{-3/2} sqrt(pi/3)
  const double quintic = kPi * kPi / 3.0 * std::pow(kPi, -1.5) * std::sqrt(kPi / 3.0);
  EXPECT_NEAR(energy_1d(phi, Params1D{1.0, 0.0, true, 1e-3, 0.0}), 1.0 + quintic, 1e-12);
  // cubic part: -g/2 int phi0^4 = -g / (2 sqrt(2 pi))
  EXPECT_NEAR(energy_1d(phi, Params1D{0.0, 1.0, true, 1e-3, 0.0}),
              1.0 - 0.5 / std::sqrt(2.0 * kPi), 1e-12);
}

TEST(Energy2D, ProductGroundStateAndBoostedWave) {
  const double eps = 0.2;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Reduction red(g, eps);
  const Field2D psi = red.build_ansatz(oscillator_ground_state(g.x()), 0.0);
  Params2D p;
  p.eps = eps;
  EXPECT_NEAR(energy_2d(psi, p), 1.0, 1e-10);
  // boost by e^{ikx} adds k^2 to the kinetic energy
  const double k = 2.0 * kPi / 16.0 * 3.0;
  Field2D boosted = psi;
  for (int iy = 0; iy < g.ny(); ++iy)
    for (int ix = 0; ix < g.nx(); ++ix) boosted.at(iy, ix) *= std::polar(1.0, k * g.x().point(ix));
  EXPECT_NEAR(energy_2d(boosted, p), 1.0 + k * k, 1e-10);
}

TEST(Energy2D, MatchesReducedEnergyOnAnsatz) {
  struct Case {
    double eps, beta, g, shift, k, width;
  };
  const Case cases[] = {{0.05, 1.0, 1.0, 0.0, 0.0, 1.0},  {0.05, 0.5, 0.0, 0.4, 0.7, 0.8},
                        {0.05, 1.0, 0.0, -0.3, 1.1, 1.2}, {0.1, 0.5, 1.0, 0.2, -0.5, 0.9},
                        {0.2, 1.0, 1.0, 0.0, 0.9, 1.0}};
  for (const Case& c : cases) {
    const Grid2D g = reference_grid(c.eps, 128, 64, 8.0);
    const Reduction red(g, c.eps);
    const Field1D phi = phased_profile(g.x(), c.shift, c.k, c.width);
    Params2D p;
    p.eps = c.eps;
    p.beta = c.beta;
    p.g = c.g;
    const Model2D m(g, p);
    const Field2D psi = red.build_ansatz(phi, c.beta);
    const double e1 =
        energy_1d(phi, Params1D{c.beta, effective_coupling(c.g, c.eps), true, 1e-3, 0.0});
    EXPECT_LT(std::abs(energy_2d(psi, m) - e1) / std::abs(e1), 1e-6)
        << "eps " << c.eps << " beta " << c.beta << " g " << c.g;
    // T gauge on the unphased product gives the same value
    const Field2D product = red.build_ansatz(phi, 0.0);
    EXPECT_LT(std::abs(energy_2d_t_gauge(product, m) - e1) / std::abs(e1), 1e-6);
  }
}

TEST(GapCheck, FlipsAtThreshold) {
  const Grid1D g(256, 10.0);
  const Params1D p{1.0, 0.0, true, 1e-3, 0.0};
  const double eps = 0.1;
  const double eta = 0.1;
  const Field1D base = oscillator_ground_state(g);
  auto scaled = [&](double a) {
    Field1D f = base;
    f *= cplx(a, 0.0);
    return f;
  };
  // E(a) is increasing; locate E(a) = eta/eps by bisection on the energy itself
  double lo = 0.1, hi = 10.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (energy_1d(scaled(mid), p) <= eta / eps ? lo : hi) = mid;
  }
  EXPECT_TRUE(energy_gap_check(scaled(lo), p, eps, eta));
  EXPECT_FALSE(energy_gap_check(scaled(hi * (1.0 + 1e-12)), p, eps, eta));
  EXPECT_NEAR(energy_1d(scaled(lo), p), eta / eps, 1e-9);
  EXPECT_TRUE(energy_gap_check(base, p, 0.05));
  EXPECT_THROW(energy_gap_check(base, p, 0.0), ConfigurationError);
}

TEST(Continuity, StationaryAndDynamic) {
  const double eps = 0.2;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Reduction red(g, eps);
  Params2D p;
  p.eps = eps;
  const Model2D still(g, p);
  const Field2D psi0 = red.build_ansatz(oscillator_ground_state(g.x()), 0.0);
  State2D s{psi0, 0.0, 0};
  step_2d(still, s);
  EXPECT_LT(continuity_residual(psi0, s.psi, p.dt, still), 1e-6);

  p.beta = 1.0;
  p.g = 1.0;
  const Model2D moving(g, p);
  const Field2D phi_state = red.build_ansatz(
      sample<cplx>(g.x(), [](double x) { return std::exp(-0.5 * (x - 0.5) * (x - 0.5)) * std::polar(1.0, 0.8 * x); }),
      1.0);
  State2D m{phi_state, 0.0, 0};
  step_2d(moving, m);
  const double r = continuity_residual(phi_state, m.psi, p.dt, moving);
  EXPECT_LT(r, 1e-3);
  // the moving state has a nonzero rate of density change for the check to bite
  EXPECT_GT(l2_norm(m.psi - phi_state), 1e-4);
}

TEST(Diagnose, ReportsAllFields) {
  const Grid1D g(128, 8.0);
  const Model1D m(g, Params1D{0.0, 0.0, true, 1e-3, 0.0});
  const Diagnostics d = diagnose(oscillator_ground_state(g), 0.5, m);
  EXPECT_DOUBLE_EQ(d.t, 0.5);
  EXPECT_NEAR(d.mass, 1.0, 1e-12);
  EXPECT_NEAR(d.energy, 1.0, 1e-12);
  EXPECT_LT(d.boundary_mass, 1e-6);
  EXPECT_TRUE(d.all_finite());
  EXPECT_FALSE(d.continuity_residual.has_value());
}
