#include "csswg/dynamics1d.hpp"

#include <cmath>
#include <numbers>

namespace csswg {

void Params1D::validate() const {
  if (!(dt > 0.0)) throw ConfigurationError("guard dt > 0 violated");
  if (!(t_end >= 0.0)) throw ConfigurationError("guard t_end >= 0 violated");
  if (!std::isfinite(beta) || !std::isfinite(g_tilde)) {
    throw ConfigurationError("guard finite beta and g_tilde violated");
  }
}

double effective_coupling(double g, double eps) {
  if (!(eps > 0.0)) throw ConfigurationError("guard eps > 0 violated");
  return g / std::sqrt(2.0 * std::numbers::pi * eps);
}

Field1D oscillator_ground_state(const Grid1D& grid) {
  const double norm = std::pow(std::numbers::pi, -0.25);
  return sample<cplx>(grid, [norm](double x) { return norm * std::exp(-0.5 * x * x); });
}

Model1D::Model1D(const Grid1D& grid, const Params1D& params)
    : grid_(grid), params_(params), spectral_(grid) {
  params_.validate();
}

RealField1D Model1D::local_potential(const Field1D& phi) const {
  if (!(phi.grid() == grid_)) throw DimensionError("Model1D: grid mismatch");
  const double c = std::numbers::pi * std::numbers::pi * params_.beta * params_.beta;
  RealField1D v(grid_);
  for (int i = 0; i < grid_.size(); ++i) {
    const double x = grid_.point(i);
    const double r = std::norm(phi[i]);
    v[i] = (params_.trap_on ? x * x : 0.0) + c * r * r - params_.g_tilde * r;
  }
  return v;
}

Field1D Model1D::apply_hamiltonian(const Field1D& phi) const {
  Field1D out = spectral_.second_derivative(phi);
  out *= -1.0;
  const RealField1D v = local_potential(phi);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i] * phi[i];
  return out;
}

Field1D Model1D::rhs(const Field1D& phi) const {
  Field1D h = apply_hamiltonian(phi);
  h *= cplx(0.0, -1.0);
  return h;
}

Field1D Model1D::strang_step(const Field1D& phi, double h) const {
  if (kinetic_.empty() || cached_h_ != h) {
    const auto k = grid_.wavenumbers();
    kinetic_.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) kinetic_[i] = std::polar(1.0, -k[i] * k[i] * h);
    cached_h_ = h;
  }
  auto half_potential = [&](Field1D& f) {
    const RealField1D v = local_potential(f);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] *= std::polar(1.0, -0.5 * h * v[i]);
  };
  Field1D out = phi;
  half_potential(out);
  out = spectral_.apply_multiplier(out, kinetic_);
  half_potential(out);
  return out;
}

void step_1d(const Model1D& model, State1D& state) {
  if (!state.psi.all_finite()) throw InstabilityError(state.t);
  const double dt = model.params().dt;
  Field1D next = model.strang_step(state.psi, dt);
  if (!next.all_finite()) throw InstabilityError(state.t + dt);
  state.psi = std::move(next);
  state.steps += 1;
  state.t = state.steps * dt;
}

State1D evolve_1d(const Model1D& model, Field1D phi0, const Observer1D& observer, int stride) {
  if (stride < 1) throw ConfigurationError("guard observer stride >= 1 violated");
  const double dt = model.params().dt;
  const long n_steps = std::lround(model.params().t_end / dt);
  State1D state{std::move(phi0), 0.0, 0};
  if (observer) observer(state);
  for (long n = 0; n < n_steps; ++n) {
    step_1d(model, state);
    if (observer && (state.steps % stride == 0 || state.steps == n_steps)) observer(state);
  }
  return state;
}

}  // namespace csswg
