#include "csswg/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "csswg/quadrature.hpp"

namespace csswg {

namespace {

bool finite_opt(const std::optional<double>& v) { return !v || std::isfinite(*v); }

// int |(-i grad + a) psi|^2 + V |psi|^2 - (g/2) |psi|^4
double energy_with_potential(const Field2D& psi, const VectorField2D& a, const Model2D& model) {
  const auto [gx, gy] = model.spectral().gradient(psi);
  const cplx I(0.0, 1.0);
  const auto& v = model.potential();
  const double g = model.params().g;
  double sum = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double r = std::norm(psi[i]);
    sum += std::norm(-I * gx[i] + a.x[i] * psi[i]) + std::norm(-I * gy[i] + a.y[i] * psi[i]) +
           v[i] * r - 0.5 * g * r * r;
  }
  return sum * psi.grid().cell_area();
}

VectorField2D density_current(const Field2D& psi, const Model2D& model) {
  VectorField2D A(psi.grid());
  if (model.params().beta != 0.0) {
    A = model.gauge().vector_potential(abs_squared(psi), model.params().beta);
  }
  return compute_current(psi, A, model.spectral());
}

}  // namespace

bool Diagnostics::all_finite() const noexcept {
  return std::isfinite(t) && std::isfinite(mass) && std::isfinite(energy) &&
         std::isfinite(boundary_mass) && finite_opt(continuity_residual) &&
         finite_opt(reduction_error);
}

double mass(const Field1D& phi) {
  const double n = l2_norm(phi);
  return n * n;
}

double mass(const Field2D& psi) {
  const double n = l2_norm(psi);
  return n * n;
}

double energy_2d(const Field2D& psi, const Model2D& model) {
  if (!(psi.grid() == model.grid())) throw DimensionError("energy_2d: grid mismatch");
  VectorField2D A(psi.grid());
  if (model.params().beta != 0.0) {
    A = model.gauge().vector_potential(abs_squared(psi), model.params().beta);
  }
  return energy_with_potential(psi, A, model);
}

double energy_2d(const Field2D& psi, const Params2D& params) {
  return energy_2d(psi, Model2D(psi.grid(), params));
}

double energy_2d_t_gauge(const Field2D& psi_t, const Model2D& model) {
  if (!(psi_t.grid() == model.grid())) throw DimensionError("energy_2d: grid mismatch");
  const VectorField2D T = compute_T(checked_density(abs_squared(psi_t)), model.params().beta);
  return energy_with_potential(psi_t, T, model);
}

double energy_1d(const Field1D& phi, const Model1D& model) {
  const Params1D& p = model.params();
  const Field1D d = model.spectral().derivative(phi);
  const double c = std::numbers::pi * std::numbers::pi * p.beta * p.beta / 3.0;
  const Grid1D& g = phi.grid();
  double sum = 0.0;
  for (int i = 0; i < g.size(); ++i) {
    const double x = g.point(i);
    const double r = std::norm(phi[i]);
    sum += std::norm(d[i]) + (p.trap_on ? x * x * r : 0.0) + c * r * r * r -
           0.5 * p.g_tilde * r * r;
  }
  return sum * g.spacing();
}

double energy_1d(const Field1D& phi, const Params1D& params) {
  return energy_1d(phi, Model1D(phi.grid(), params));
}

double continuity_residual(const Field2D& psi_prev, const Field2D& psi_next, double dt,
                           const Model2D& model) {
  psi_prev.require_same_grid(psi_next);
  const VectorField2D j0 = density_current(psi_prev, model);
  const VectorField2D j1 = density_current(psi_next, model);
  const VectorField2D jm(0.5 * (j0.x + j1.x), 0.5 * (j0.y + j1.y));
  RealField2D two_div = model.spectral().div(jm);
  two_div *= 2.0;
  const RealField2D r0 = abs_squared(psi_prev);
  const RealField2D r1 = abs_squared(psi_next);
  RealField2D res(psi_prev.grid());
  RealField2D rho_mid(psi_prev.grid());
  for (std::size_t i = 0; i < res.size(); ++i) {
    res[i] = (r1[i] - r0[i]) / dt + two_div[i];
    rho_mid[i] = 0.5 * (r0[i] + r1[i]);
  }
  const double scale = std::max(l2_norm(two_div), l2_norm(rho_mid));
  return scale > 0.0 ? l2_norm(res) / scale : 0.0;
}

bool energy_gap_check(const Field1D& phi, const Params1D& params, double eps, double eta) {
  if (!(eps > 0.0)) throw ConfigurationError("guard eps > 0 violated");
  return std::abs(energy_1d(phi, params)) <= eta / eps;
}

Diagnostics diagnose(const Field2D& psi, double t, const Model2D& model) {
  Diagnostics d;
  d.t = t;
  d.mass = mass(psi);
  d.energy = energy_2d(psi, model);
  d.boundary_mass = boundary_ratio(psi);
  return d;
}

Diagnostics diagnose(const Field1D& phi, double t, const Model1D& model) {
  Diagnostics d;
  d.t = t;
  d.mass = mass(phi);
  d.energy = energy_1d(phi, model);
  const int n = phi.grid().size();
  double peak = 0.0;
  for (const auto& v : phi.values()) peak = std::max(peak, std::abs(v));
  d.boundary_mass =
      peak > 0.0 ? std::max(std::abs(phi[0]), std::abs(phi[n - 1])) / peak : 0.0;
  return d;
}

}  // namespace csswg
