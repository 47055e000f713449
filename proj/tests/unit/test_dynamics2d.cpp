#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "csswg/dynamics2d.hpp"
#include "csswg/observables.hpp"
#include "csswg/quadrature.hpp"
#include "csswg/reduction.hpp"

using namespace csswg;

namespace {

constexpr double kPi = std::numbers::pi;

Field2D product_ground_state(const Grid2D& g, double eps) {
  return sample<cplx>(g, [eps](double x, double y) {
    return std::pow(kPi, -0.25) * std::exp(-0.5 * x * x) * std::pow(kPi * eps, -0.25) *
           std::exp(-0.5 * y * y / eps);
  });
}

Field2D smooth_state(const Grid2D& g, double eps) {
  Field2D f = sample<cplx>(g, [eps](double x, double y) {
    return std::exp(-0.5 * (x - 0.3) * (x - 0.3) - 0.5 * y * y / eps) *
           std::polar(1.0, 0.4 * x + 0.2 * y / std::sqrt(eps)) * (1.0 + 0.2 * x * y);
  });
  f *= cplx(1.0 / l2_norm(f), 0.0);
  return f;
}

Params2D params(double beta, double g, double eps, double dt, double t_end) {
  Params2D p;
  p.beta = beta;
  p.g = g;
  p.eps = eps;
  p.dt = dt;
  p.t_end = t_end;
  return p;
}

}  // namespace

TEST(Params2D, GuardsAreEnforced) {
  EXPECT_NO_THROW(params(1, 1, 0.1, 1e-3, 1).validate());
  EXPECT_THROW(params(1, 1, 0.0, 1e-3, 1).validate(), ConfigurationError);
  EXPECT_THROW(params(1, 1, 0.1, 0.0, 1).validate(), ConfigurationError);
  EXPECT_THROW(params(1, 1, 0.01, 0.01, 1).validate(), ConfigurationError);
  try {
    params(1, 1, 0.01, 0.01, 1).validate();
  } catch (const ConfigurationError& e) {
    EXPECT_NE(std::string(e.what()).find("dt*(1/eps) <= 0.5"), std::string::npos);
  }
}

TEST(Rhs2D, ProductEigenstateHasUnitEnergy) {
  const double eps = 0.1;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Model2D m(g, params(0, 0, eps, 1e-3, 0));
  const Field2D psi = product_ground_state(g, eps);
  Field2D expected = psi;
  expected *= cplx(0.0, -1.0);
  EXPECT_LT(l2_norm(m.rhs(psi) - expected), 1e-8);
}

TEST(Rhs2D, ZeroMapsToZero) {
  const Grid2D g = reference_grid(0.2, 32, 32, 8.0);
  const Model2D m(g, params(1.0, 1.0, 0.2, 1e-3, 0));
  EXPECT_EQ(l2_norm(m.rhs(Field2D(g))), 0.0);
}

TEST(Rhs2D, MatchesTermByTermAssembly) {
  const double eps = 0.2;
  const double beta = 0.8;
  const double gc = 0.5;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Model2D m(g, params(beta, gc, eps, 1e-3, 0));
  const Field2D psi = smooth_state(g, eps);

  const GaugeSolver solver(g);
  const RealField2D rho = abs_squared(psi);
  const VectorField2D A = solver.vector_potential(rho, beta);
  const auto [gx, gy] = gradient(psi);
  const Field2D lap = Spectral2D(g).laplacian(psi);
  const VectorField2D J = compute_current_A(psi, A);
  const RealField2D K = solver.current_potential(J);
  Field2D expected(g);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double x = g.x().point(static_cast<int>(i % g.nx()));
    const double y = g.y().point(static_cast<int>(i / g.nx()));
    const double V = x * x + y * y / (eps * eps) - 1.0 / eps;
    const cplx h = -lap[i] - 2.0 * cplx(0, 1) * (A.x[i] * gx[i] + A.y[i] * gy[i]) +
                   (A.x[i] * A.x[i] + A.y[i] * A.y[i]) * psi[i] + V * psi[i] -
                   gc * rho[i] * psi[i] - 2.0 * beta * K[i] * psi[i];
    expected[i] = cplx(0, -1) * h;
  }
  const Field2D r = m.rhs(psi);
  EXPECT_LT(l2_norm(r - expected) / l2_norm(expected), 1e-9);

  const auto t = m.hamiltonian_terms(psi);
  const Field2D sum = t.kinetic + t.magnetic + t.trap + t.contact + t.current;
  EXPECT_LT(l2_norm(sum - m.apply_hamiltonian(psi)), 1e-12 * l2_norm(sum));
}

TEST(Rhs2D, BoundaryOverflowIsReported) {
  const double eps = 0.2;
  const Grid2D g = reference_grid(eps, 32, 32, 8.0);
  const Model2D m(g, params(0, 0, eps, 1e-3, 0));
  Field2D psi = product_ground_state(g, eps);
  psi.at(0, 5) = 1e-3;
  EXPECT_THROW(m.rhs(psi), DomainOverflowError);
  try {
    m.rhs(psi);
  } catch (const DomainOverflowError& e) {
    EXPECT_GT(e.ratio(), 1e-6);
  }
}

TEST(Step2D, NonFiniteStateIsInstability) {
  const double eps = 0.2;
  const Grid2D g = reference_grid(eps, 32, 32, 8.0);
  const Model2D m(g, params(0, 0, eps, 1e-3, 0));
  State2D s{product_ground_state(g, eps), 0.25, 250};
  s.psi.at(10, 10) = cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
  try {
    step_2d(m, s);
    FAIL() << "expected InstabilityError";
  } catch (const InstabilityError& e) {
    EXPECT_DOUBLE_EQ(e.time(), 0.25);
  }
}

TEST(Step2D, EigenstateAcquiresPhase) {
  const double eps = 0.1;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Model2D m(g, params(0, 0, eps, 1e-3, 1.0));
  const Field2D psi0 = product_ground_state(g, eps);
  const State2D s = evolve_2d(m, psi0);
  EXPECT_NEAR(s.t, 1.0, 1e-12);
  Field2D expected = psi0;
  expected *= std::polar(1.0, -1.0);
  EXPECT_LT(l2_norm(s.psi - expected), 1e-6);
}

TEST(Step2D, ClassicalRk4AgreesWithLawsonOnShortRun) {
  const double eps = 0.2;
  const Grid2D g = reference_grid(eps, 32, 32, 8.0);
  Params2D p = params(0.5, 0.5, eps, 2e-4, 0.01);
  const Model2D lawson(g, p);
  p.integrator = Integrator::ClassicalRK4;
  const Model2D classical(g, p);
  const Field2D psi0 = smooth_state(g, eps);
  const Field2D a = evolve_2d(lawson, psi0).psi;
  const Field2D b = evolve_2d(classical, psi0).psi;
  EXPECT_LT(l2_norm(a - b), 1e-8);
}

TEST(Step2D, ConservesMassAndEnergy) {
  const double eps = 0.2;
  const Grid2D g = reference_grid(eps, 64, 64, 12.0);
  const Model2D m(g, params(1.0, 1.0, eps, 1e-3, 0.05));
  const Reduction red(g, eps);
  const Field1D phi = sample<cplx>(g.x(), [](double x) {
    return std::pow(kPi, -0.25) * std::exp(-0.5 * (x - 0.5) * (x - 0.5)) * std::polar(1.0, 0.5 * x);
  });
  const Field2D psi0 = red.build_ansatz(phi, 1.0);
  const double m0 = mass(psi0);
  const double e0 = energy_2d(psi0, m);
  const State2D s = evolve_2d(m, psi0);
  EXPECT_LT(std::abs(mass(s.psi) - m0) / m0, 1e-7);
  EXPECT_LT(std::abs(energy_2d(s.psi, m) - e0) / std::abs(e0), 1e-6);
}

TEST(Evolve2D, ObserverCadence) {
  const double eps = 0.2;
  const Grid2D g = reference_grid(eps, 32, 32, 8.0);
  const Model2D m(g, params(0, 0, eps, 1e-3, 0.011));
  std::vector<double> times;
  evolve_2d(m, product_ground_state(g, eps), [&](const State2D& s) { times.push_back(s.t); }, 5);
  ASSERT_EQ(times.size(), 4u);
  EXPECT_DOUBLE_EQ(times[0], 0.0);
  EXPECT_NEAR(times[1], 0.005, 1e-15);
  EXPECT_NEAR(times[2], 0.010, 1e-15);
  EXPECT_NEAR(times[3], 0.011, 1e-15);
  EXPECT_THROW(evolve_2d(m, product_ground_state(g, eps), {}, 0), ConfigurationError);
}
