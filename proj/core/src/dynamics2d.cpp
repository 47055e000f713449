#include "csswg/dynamics2d.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace csswg {

void Params2D::validate() const {
  if (!(eps > 0.0)) throw ConfigurationError("guard eps > 0 violated");
  if (!(dt > 0.0)) throw ConfigurationError("guard dt > 0 violated");
  if (dt / eps > 0.5) {
    throw ConfigurationError("guard dt*(1/eps) <= 0.5 (transverse gap resolution) violated");
  }
  if (!(t_end >= 0.0)) throw ConfigurationError("guard t_end >= 0 violated");
  if (!std::isfinite(beta) || !std::isfinite(g)) {
    throw ConfigurationError("guard finite beta and g violated");
  }
  if (!(boundary_tolerance > 0.0)) {
    throw ConfigurationError("guard boundary_tolerance > 0 violated");
  }
}

RealField2D trap_potential_2d(const Grid2D& grid, double eps) {
  return sample<double>(grid, [eps](double x, double y) {
    return x * x + y * y / (eps * eps) - 1.0 / eps;
  });
}

double boundary_ratio(const Field2D& psi) {
  const Grid2D& g = psi.grid();
  double peak = 0.0;
  for (const auto& v : psi.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  double ring = 0.0;
  for (int ix = 0; ix < g.nx(); ++ix) {
    ring = std::max({ring, std::abs(psi.at(0, ix)), std::abs(psi.at(g.ny() - 1, ix))});
  }
  for (int iy = 0; iy < g.ny(); ++iy) {
    ring = std::max({ring, std::abs(psi.at(iy, 0)), std::abs(psi.at(iy, g.nx() - 1))});
  }
  return ring / peak;
}

Model2D::Model2D(const Grid2D& grid, const Params2D& params)
    : grid_(grid),
      params_(params),
      gauge_(grid, params.boundary),
      spectral_(grid),
      potential_(trap_potential_2d(grid, params.eps)) {
  params_.validate();
  if (!params_.trap_on) potential_ *= 0.0;
}

Model2D::Terms Model2D::hamiltonian_terms(const Field2D& psi) const {
  if (!(psi.grid() == grid_)) throw DimensionError("Model2D: grid mismatch");
  const double beta = params_.beta;
  const auto d = spectral_.derivatives(psi);
  const RealField2D rho = abs_squared(psi);

  VectorField2D A(grid_);
  if (beta != 0.0) A = gauge_.vector_potential(rho, beta);

  Terms t{Field2D(grid_), Field2D(grid_), Field2D(grid_), Field2D(grid_), Field2D(grid_)};
  const cplx I(0.0, 1.0);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double ax = A.x[i];
    const double ay = A.y[i];
    t.kinetic[i] = -d.laplacian[i];
    t.magnetic[i] = -2.0 * I * (ax * d.dx[i] + ay * d.dy[i]) + (ax * ax + ay * ay) * psi[i];
    t.trap[i] = potential_[i] * psi[i];
    t.contact[i] = -params_.g * rho[i] * psi[i];
  }
  if (params_.current_term && beta != 0.0) {
    VectorField2D J(grid_);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const cplx c = std::conj(psi[i]);
      J.x[i] = std::imag(c * d.dx[i]) + A.x[i] * rho[i];
      J.y[i] = std::imag(c * d.dy[i]) + A.y[i] * rho[i];
    }
    const RealField2D K = gauge_.current_potential(J);
    for (std::size_t i = 0; i < psi.size(); ++i) t.current[i] = -2.0 * beta * K[i] * psi[i];
  }
  return t;
}

Field2D Model2D::hamiltonian(const Field2D& psi, bool with_kinetic) const {
  Terms t = hamiltonian_terms(psi);
  Field2D out = std::move(t.magnetic);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += t.trap[i] + t.contact[i] + t.current[i];
    if (with_kinetic) out[i] += t.kinetic[i];
  }
  return out;
}

Field2D Model2D::apply_hamiltonian(const Field2D& psi) const { return hamiltonian(psi, true); }

Field2D Model2D::rhs(const Field2D& psi) const {
  if (!psi.all_finite()) throw InputError("rhs_2d: non-finite wave function");
  check_boundary(psi);
  Field2D h = hamiltonian(psi, true);
  h *= cplx(0.0, -1.0);
  return h;
}

Field2D Model2D::nonlinear_rhs(const Field2D& psi) const {
  Field2D h = hamiltonian(psi, false);
  h *= cplx(0.0, -1.0);
  return h;
}

Field2D Model2D::free_propagate(const Field2D& psi, double h) const {
  const auto k2 = spectral_.k_squared();
  std::vector<cplx> m(k2.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::polar(1.0, -k2[i] * h);
  return spectral_.apply_multiplier(psi, m);
}

void Model2D::check_boundary(const Field2D& psi) const {
  const double r = boundary_ratio(psi);
  if (r > params_.boundary_tolerance) throw DomainOverflowError(r, params_.boundary_tolerance);
}

namespace {

Field2D combine(const Field2D& u, double a, const Field2D& k) {
  Field2D out = u;
  out.axpy(cplx(a, 0.0), k);
  return out;
}

Field2D lawson_step(const Model2D& m, const Field2D& u, double dt) {
  const double h = 0.5 * dt;
  const Field2D k1 = m.nonlinear_rhs(u);
  const Field2D k2 = m.nonlinear_rhs(m.free_propagate(combine(u, h, k1), h));
  const Field2D eu = m.free_propagate(u, h);
  const Field2D k3 = m.nonlinear_rhs(combine(eu, h, k2));
  const Field2D k4 = m.nonlinear_rhs(m.free_propagate(combine(eu, dt, k3), h));
  Field2D mid = m.free_propagate(combine(u, dt / 6.0, k1), h);
  mid.axpy(cplx(dt / 3.0, 0.0), k2);
  mid.axpy(cplx(dt / 3.0, 0.0), k3);
  Field2D out = m.free_propagate(mid, h);
  out.axpy(cplx(dt / 6.0, 0.0), k4);
  return out;
}

Field2D classical_step(const Model2D& m, const Field2D& u, double dt) {
  auto full = [&m](const Field2D& v) {
    Field2D r = m.apply_hamiltonian(v);
    r *= cplx(0.0, -1.0);
    return r;
  };
  const Field2D f1 = full(u);
  const Field2D f2 = full(combine(u, 0.5 * dt, f1));
  const Field2D f3 = full(combine(u, 0.5 * dt, f2));
  const Field2D f4 = full(combine(u, dt, f3));
  Field2D out = u;
  out.axpy(cplx(dt / 6.0, 0.0), f1);
  out.axpy(cplx(dt / 3.0, 0.0), f2);
  out.axpy(cplx(dt / 3.0, 0.0), f3);
  out.axpy(cplx(dt / 6.0, 0.0), f4);
  return out;
}

}  // namespace

void step_2d(const Model2D& model, State2D& state) {
  if (!state.psi.all_finite()) throw InstabilityError(state.t);
  model.check_boundary(state.psi);
  const double dt = model.params().dt;
  Field2D next = model.params().integrator == Integrator::LawsonRK4
                     ? lawson_step(model, state.psi, dt)
                     : classical_step(model, state.psi, dt);
  if (!next.all_finite()) throw InstabilityError(state.t + dt);
  state.psi = std::move(next);
  state.steps += 1;
  state.t = state.steps * dt;
}

State2D evolve_2d(const Model2D& model, Field2D psi0, const Observer2D& observer, int stride) {
  if (stride < 1) throw ConfigurationError("guard observer stride >= 1 violated");
  const double dt = model.params().dt;
  const long n_steps = std::lround(model.params().t_end / dt);
  State2D state{std::move(psi0), 0.0, 0};
  if (observer) observer(state);
  for (long n = 0; n < n_steps; ++n) {
    step_2d(model, state);
    if (observer && (state.steps % stride == 0 || state.steps == n_steps)) observer(state);
  }
  return state;
}

}  // namespace csswg
