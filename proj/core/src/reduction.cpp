#include "csswg/reduction.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "csswg/quadrature.hpp"

namespace csswg {

namespace {

constexpr double kPi = std::numbers::pi;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double l2_diff(const Field1D& a, const Field1D& b) { return l2_norm(a - b); }

// Least-squares coefficient c of |phi|^4 phi in i*D - (-phi'' + x^2 phi - g_tilde |phi|^2 phi).
double quintic_coefficient(const Field1D& phi, const Field1D& derivative, double g_tilde) {
  const Model1D linear_cubic(phi.grid(), Params1D{0.0, g_tilde, true, 1e-3, 0.0});
  const Field1D h = linear_cubic.apply_hamiltonian(phi);
  Field1D q(phi.grid());
  Field1D rest(phi.grid());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double r = std::norm(phi[i]);
    q[i] = r * r * phi[i];
    rest[i] = cplx(0.0, 1.0) * derivative[i] - h[i];
  }
  const double qq = std::real(inner(q, q));
  return qq > 0.0 ? std::real(inner(q, rest)) / qq : 0.0;
}

}  // namespace

TransverseProfile build_profile(double eps, const Grid1D& y_grid) {
  if (!(eps > 0.0)) throw ConfigurationError("guard eps > 0 violated");
  const double s = std::sqrt(eps);
  if (y_grid.half_width() < 6.0 * s) {
    throw ConfigurationError("guard Ly >= 6 sqrt(eps) (transverse resolution) violated");
  }
  if (y_grid.spacing() > 0.25 * s) {
    throw ConfigurationError("guard dy <= sqrt(eps)/4 (transverse resolution) violated");
  }
  TransverseProfile p{eps, y_grid, {}, {}, 0.0};
  const int n = y_grid.size();
  p.u.resize(static_cast<std::size_t>(n));
  std::vector<double> u2(static_cast<std::size_t>(n));
  const double norm = std::pow(kPi * eps, -0.25);
  for (int i = 0; i < n; ++i) {
    const double y = y_grid.point(i);
    p.u[i] = norm * std::exp(-y * y / (2.0 * eps));
    u2[i] = p.u[i] * p.u[i];
  }
  p.f = sign_convolution(u2, y_grid);
  for (int i = 0; i < n; ++i) {
    p.erf_deviation =
        std::max(p.erf_deviation, std::abs(p.f[i] - std::erf(y_grid.point(i) / s)));
  }
  return p;
}

Grid2D reference_grid(double eps, int nx, int ny, double Lx, double ly_factor) {
  if (!(eps > 0.0)) throw ConfigurationError("guard eps > 0 violated");
  if (!(ly_factor >= 6.0)) throw ConfigurationError("guard Ly >= 6 sqrt(eps) violated");
  return Grid2D(nx, ny, Lx, ly_factor * std::sqrt(eps));
}

Reduction::Reduction(const Grid2D& grid, double eps, GaugeBoundary boundary)
    : grid_(grid), profile_(build_profile(eps, grid.y())), gauge_(grid, boundary) {}

RealField2D Reduction::ansatz_phase(const Field1D& phi, double beta) const {
  if (!(phi.grid() == grid_.x())) throw DimensionError("ansatz: phi must live on the x-axis");
  RealField2D rho(grid_);
  for (int iy = 0; iy < grid_.ny(); ++iy) {
    const double u2 = profile_.u[iy] * profile_.u[iy];
    for (int ix = 0; ix < grid_.nx(); ++ix) rho.at(iy, ix) = std::norm(phi[ix]) * u2;
  }
  if (beta == 0.0) return RealField2D(grid_);
  return gauge_.gauge_phase(checked_density(rho), beta);
}

Field2D Reduction::build_ansatz(const Field1D& phi, double beta) const {
  const RealField2D s = ansatz_phase(phi, beta);
  Field2D psi(grid_);
  for (int iy = 0; iy < grid_.ny(); ++iy) {
    for (int ix = 0; ix < grid_.nx(); ++ix) {
      psi.at(iy, ix) = phi[ix] * profile_.u[iy] * std::polar(1.0, -s.at(iy, ix));
    }
  }
  return psi;
}

Field1D Reduction::project_with_phase(const Field2D& psi, const RealField2D& beta_s) const {
  if (!(psi.grid() == grid_)) throw DimensionError("project: grid mismatch");
  Field1D out(grid_.x());
  const double dy = grid_.dy();
  for (int iy = 0; iy < grid_.ny(); ++iy) {
    const double w = profile_.u[iy] * dy;
    for (int ix = 0; ix < grid_.nx(); ++ix) {
      out[ix] += psi.at(iy, ix) * std::polar(w, beta_s.at(iy, ix));
    }
  }
  return out;
}

Field1D Reduction::project(const Field2D& psi, double beta) const {
  if (beta == 0.0) return project_with_phase(psi, RealField2D(grid_));
  return project_with_phase(psi, gauge_.gauge_phase(checked_density(abs_squared(psi)), beta));
}

Field1D Reduction::project_derivative(const Field2D& psi, const Field2D& dpsi,
                                      double beta) const {
  if (beta == 0.0) return project_with_phase(dpsi, RealField2D(grid_));
  const RealField2D s = gauge_.gauge_phase(checked_density(abs_squared(psi)), beta);
  RealField2D sigma(grid_);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    sigma[i] = 2.0 * std::real(std::conj(psi[i]) * dpsi[i]);
  }
  const RealField2D s_rate = gauge_.gauge_phase(sigma, beta);
  Field2D total = dpsi;
  for (std::size_t i = 0; i < total.size(); ++i) {
    total[i] += cplx(0.0, s_rate[i]) * psi[i];
  }
  return project_with_phase(total, s);
}

Field2D build_ansatz(const Field1D& phi, const TransverseProfile& profile, double beta) {
  return Reduction(Grid2D(phi.grid(), profile.grid), profile.eps).build_ansatz(phi, beta);
}

Field1D project_to_1d(const Field2D& psi, const TransverseProfile& profile, double beta) {
  return Reduction(psi.grid(), profile.eps).project(psi, beta);
}

Field1D rhs_1d_reference(const Field1D& phi, double beta, double g_tilde) {
  return Model1D(phi.grid(), Params1D{beta, g_tilde, true, 1e-3, 0.0}).rhs(phi);
}

ConsistencyRow rhs_consistency(const Field1D& phi, double beta, double g, double eps, int ny) {
  const auto start = std::chrono::steady_clock::now();
  const Grid2D grid = reference_grid(eps, phi.grid().size(), ny, phi.grid().half_width(), 7.0);
  const Reduction red(grid, eps);
  const double g_tilde = effective_coupling(g, eps);

  Params2D p;
  p.beta = beta;
  p.g = g;
  p.eps = eps;
  p.dt = 0.25 * eps;
  const Model2D full_model(grid, p);
  p.current_term = false;
  const Model2D no_current_model(grid, p);

  const RealField2D s = red.ansatz_phase(phi, beta);
  Field2D psi(grid);
  for (int iy = 0; iy < grid.ny(); ++iy) {
    for (int ix = 0; ix < grid.nx(); ++ix) {
      psi.at(iy, ix) = phi[ix] * red.profile().u[iy] * std::polar(1.0, -s.at(iy, ix));
    }
  }
  const Field1D reference = rhs_1d_reference(phi, beta, g_tilde);

  const Field2D rhs = full_model.rhs(psi);
  const Field1D literal = red.project_with_phase(rhs, s);
  const Field1D with_rate = red.project_derivative(psi, rhs, beta);
  const Field1D no_current = red.project_with_phase(no_current_model.rhs(psi), s);

  ConsistencyRow row;
  row.eps = eps;
  row.beta = beta;
  row.g = g;
  row.residual = l2_diff(literal, reference);
  row.residual_full = l2_diff(with_rate, reference);
  row.quintic_fit = quintic_coefficient(phi, with_rate, g_tilde);
  row.quintic_fit_no_current = quintic_coefficient(phi, no_current, g_tilde);
  row.runtime_s = seconds_since(start);
  return row;
}

std::vector<ConsistencyRow> rhs_consistency_residual(const Field1D& phi, double beta, double g,
                                                     const std::vector<double>& eps_list,
                                                     int ny) {
  std::vector<ConsistencyRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) rows.push_back(rhs_consistency(phi, beta, g, eps, ny));
  return rows;
}

ReduceResult reduce_leg(const Field1D& phi0, const ReduceOptions& o,
                        const ReduceObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  if (o.sample_stride < 1) throw ConfigurationError("guard sample_stride >= 1 violated");
  const Grid2D grid = reference_grid(o.eps, o.nx, o.ny, o.Lx, o.ly_factor);
  if (!(phi0.grid() == grid.x())) throw DimensionError("reduce: phi0 must live on the x-axis");

  Params2D p2;
  p2.beta = o.beta;
  p2.g = o.g;
  p2.eps = o.eps;
  p2.dt = o.dt;
  p2.t_end = o.t_end;
  p2.integrator = o.integrator;
  const Model2D m2(grid, p2);
  const Model1D m1(grid.x(),
                   Params1D{o.beta, effective_coupling(o.g, o.eps), true, o.dt, o.t_end});
  const Reduction red(grid, o.eps);

  State2D s2{red.build_ansatz(phi0, o.beta), 0.0, 0};
  State1D s1{phi0, 0.0, 0};

  ReduceResult result;
  result.eps = o.eps;
  const Diagnostics d2_0 = diagnose(s2.psi, 0.0, m2);
  const Diagnostics d1_0 = diagnose(s1.psi, 0.0, m1);

  auto record = [&](std::optional<double> continuity) {
    Field1D projected = red.project(s2.psi, o.beta);
    if (o.align_phase) {
      const cplx z = inner(projected, s1.psi);
      if (std::abs(z) > 0.0) projected *= z / std::abs(z);
    }
    const double err = l2_diff(projected, s1.psi);
    ReduceSample smp{diagnose(s2.psi, s2.t, m2), diagnose(s1.psi, s1.t, m1)};
    smp.diag2d.reduction_error = err;
    smp.diag2d.continuity_residual = continuity;
    smp.diag1d.reduction_error = err;
    result.sup_error = std::max(result.sup_error, err);
    result.mass_drift_2d =
        std::max(result.mass_drift_2d, std::abs(smp.diag2d.mass - d2_0.mass) / d2_0.mass);
    result.mass_drift_1d =
        std::max(result.mass_drift_1d, std::abs(smp.diag1d.mass - d1_0.mass) / d1_0.mass);
    result.energy_drift_2d = std::max(
        result.energy_drift_2d, std::abs(smp.diag2d.energy - d2_0.energy) / std::abs(d2_0.energy));
    result.energy_drift_1d = std::max(
        result.energy_drift_1d, std::abs(smp.diag1d.energy - d1_0.energy) / std::abs(d1_0.energy));
    if (continuity) result.max_continuity = std::max(result.max_continuity, *continuity);
    result.samples.push_back(std::move(smp));
    if (observer) observer(s2.t, s2.psi, s1.psi);
  };

  record(std::nullopt);
  const long n_steps = std::lround(o.t_end / o.dt);
  for (long n = 1; n <= n_steps; ++n) {
    const bool sample = (n % o.sample_stride == 0) || n == n_steps;
    std::optional<Field2D> prev;
    if (sample) prev = s2.psi;
    step_2d(m2, s2);
    step_1d(m1, s1);
    if (sample) record(continuity_residual(*prev, s2.psi, o.dt, m2));
  }
  result.final_2d = s2.psi;
  result.final_1d = s1.psi;
  result.runtime_s = seconds_since(start);
  return result;
}

}  // namespace csswg
