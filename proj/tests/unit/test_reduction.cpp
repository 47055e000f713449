#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "csswg/quadrature.hpp"
#include "csswg/reduction.hpp"
#include "csswg/spectral.hpp"

using namespace csswg;

namespace {

constexpr double kPi = std::numbers::pi;

double integrate(const std::vector<double>& v, double h) {
  double s = 0.0;
  for (double x : v) s += x;
  return s * h;
}

Field1D smooth_profile(const Grid1D& g) {
  return sample<cplx>(g, [](double x) {
    return std::exp(-0.5 * (x - 0.3) * (x - 0.3)) * std::polar(1.0, 0.6 * x + 0.1 * x * x);
  });
}

}  // namespace

TEST(Profile, NormalizedOscillatorGroundState) {
  const double eps = 0.1;
  const Grid1D y(128, 4.0);
  const TransverseProfile p = build_profile(eps, y);
  std::vector<double> u2(p.u.size());
  for (std::size_t i = 0; i < u2.size(); ++i) u2[i] = p.u[i] * p.u[i];
  EXPECT_NEAR(integrate(u2, y.spacing()), 1.0, 1e-8);

  const Spectral1D sp(y);
  RealField1D u(y, p.u);
  const Field1D upp = sp.second_derivative(to_complex(u));
  double res = 0.0;
  for (int i = 0; i < y.size(); ++i) {
    const double yy = y.point(i);
    const double r = -upp[i].real() + yy * yy / (eps * eps) * p.u[i] - p.u[i] / eps;
    res += r * r;
  }
  EXPECT_LT(std::sqrt(res * y.spacing()), 1e-5);
}

TEST(Profile, SignIdentities) {
  for (double eps : {0.5, 0.2, 0.1, 0.05}) {
    const Grid1D y(64, 7.0 * std::sqrt(eps));
    const TransverseProfile p = build_profile(eps, y);
    std::vector<double> fu2(p.u.size()), f2u2(p.u.size());
    for (std::size_t i = 0; i < p.u.size(); ++i) {
      fu2[i] = p.f[i] * p.u[i] * p.u[i];
      f2u2[i] = p.f[i] * p.f[i] * p.u[i] * p.u[i];
    }
    EXPECT_LT(std::abs(integrate(fu2, y.spacing())), 1e-8) << eps;
    EXPECT_LT(std::abs(integrate(f2u2, y.spacing()) - 1.0 / 3.0), 1e-6) << eps;
    for (std::size_t i = 1; i < p.f.size(); ++i) EXPECT_GE(p.f[i], p.f[i - 1] - 1e-15);
    EXPECT_NEAR(p.f.front(), -1.0, 1e-6);
    EXPECT_NEAR(p.f.back(), 1.0, 1e-6);
    EXPECT_LT(p.erf_deviation, 1e-3);
  }
}

TEST(Profile, ResolutionGuards) {
  EXPECT_THROW(build_profile(0.1, Grid1D(64, 1.0)), ConfigurationError);
  EXPECT_THROW(build_profile(0.1, Grid1D(16, 2.5)), ConfigurationError);
  EXPECT_THROW(build_profile(0.0, Grid1D(64, 2.5)), ConfigurationError);
}

TEST(Ansatz, ZeroCouplingIsPlainProduct) {
  const double eps = 0.1;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Reduction red(g, eps);
  const Field1D phi = smooth_profile(g.x());
  const Field2D psi = red.build_ansatz(phi, 0.0);
  double worst = 0.0;
  for (int iy = 0; iy < g.ny(); ++iy)
    for (int ix = 0; ix < g.nx(); ++ix)
      worst = std::max(worst, std::abs(psi.at(iy, ix) - phi[ix] * red.profile().u[iy]));
  EXPECT_EQ(worst, 0.0);
}

TEST(Ansatz, ProjectionRoundTrip) {
  for (double eps : {0.2, 0.05}) {
    const Grid2D g = reference_grid(eps, 128, 64, 8.0);
    const Reduction red(g, eps);
    const Field1D phi = smooth_profile(g.x());
    for (double beta : {0.0, 0.5, 1.0, 2.0}) {
      const Field1D back = red.project(red.build_ansatz(phi, beta), beta);
      EXPECT_LT(l2_norm(back - phi), 1e-8) << eps << " " << beta;
    }
  }
}

TEST(Ansatz, FreeFunctionsAgreeWithReduction) {
  const double eps = 0.2;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Reduction red(g, eps);
  const Field1D phi = smooth_profile(g.x());
  const Field2D a = build_ansatz(phi, red.profile(), 0.7);
  EXPECT_LT(l2_norm(a - red.build_ansatz(phi, 0.7)), 1e-14);
  EXPECT_LT(l2_norm(project_to_1d(a, red.profile(), 0.7) - phi), 1e-8);
}

TEST(Projection, OrthogonalTransverseModeVanishes) {
  const double eps = 0.1;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Reduction red(g, eps);
  const Field2D psi = sample<cplx>(g, [eps](double x, double y) {
    return std::exp(-0.5 * x * x) * std::polar(1.0, x) * y * std::exp(-0.5 * y * y / eps);
  });
  EXPECT_LT(l2_norm(red.project(psi, 0.0)), 1e-10);
}

TEST(Projection, BoundedByStateNorm) {
  const double eps = 0.1;
  const Grid2D g = reference_grid(eps, 64, 64, 8.0);
  const Reduction red(g, eps);
  const Field2D psi = sample<cplx>(g, [eps](double x, double y) {
    return std::exp(-0.5 * x * x - 0.3 * y * y / eps) * std::polar(1.0, 0.3 * x * y / eps) *
           (1.0 + 0.5 * y / std::sqrt(eps));
  });
  for (double beta : {0.0, 1.0})
    EXPECT_LE(l2_norm(red.project(psi, beta)), l2_norm(psi) * (1.0 + 1e-14));
}

TEST(Consistency, LinearProblemIsExact) {
  const Grid1D x(256, 8.0);
  const Field1D phi = oscillator_ground_state(x);
  for (double eps : {0.2, 0.1, 0.05})
    EXPECT_LT(rhs_consistency(phi, 0.0, 0.0, eps).residual, 1e-8) << eps;
}

TEST(Consistency, ResidualDecreasesAndQuinticSplits) {
  const Grid1D x(256, 8.0);
  const Field1D phi = oscillator_ground_state(x);
  const auto rows = rhs_consistency_residual(phi, 1.0, 0.0, {0.2, 0.1, 0.05});
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_LT(rows[1].residual, rows[0].residual);
  EXPECT_LT(rows[2].residual, rows[1].residual);
  const double c = kPi * kPi;
  for (const auto& r : rows) {
    EXPECT_NEAR(r.quintic_fit / c, 1.0, 0.05);
    EXPECT_NEAR(r.quintic_fit_no_current / (c / 3.0), 1.0, 0.05);
    EXPECT_LT(r.residual_full, 1e-6);
  }
}

TEST(ReduceLeg, SeparableControlRun) {
  const Grid1D x(128, 8.0);
  ReduceOptions o;
  o.eps = 0.2;
  o.nx = 128;
  o.t_end = 0.1;
  o.Lx = 8.0;
  const ReduceResult r = reduce_leg(oscillator_ground_state(x), o);
  EXPECT_LT(r.sup_error, 1e-6);
  EXPECT_LT(r.mass_drift_2d, 1e-7);
  EXPECT_GT(r.samples.size(), 2u);
  ASSERT_TRUE(r.samples.back().diag2d.reduction_error.has_value());
}
