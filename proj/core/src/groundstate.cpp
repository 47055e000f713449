#include "csswg/groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "csswg/observables.hpp"
#include "csswg/quadrature.hpp"

namespace csswg {

namespace {

template <typename FieldT>
void normalize(FieldT& f) {
  const double n = l2_norm(f);
  if (!(n > 0.0) || !std::isfinite(n)) throw InstabilityError(0.0);
  f *= cplx(1.0 / n, 0.0);
}

std::string format_trace(const std::vector<double>& energies) {
  std::ostringstream os;
  os.precision(15);
  const std::size_t first = energies.size() > 10 ? energies.size() - 10 : 0;
  for (std::size_t i = first; i < energies.size(); ++i) {
    os << (i == first ? "" : ", ") << energies[i];
  }
  return os.str();
}

// Preconditioned projected gradient flow:
//   psi <- normalize(psi - 2 dtau P (H psi - mu psi)),  P = (1 + 2 dtau k^2)^{-1},
// whose fixed points are exact eigenstates of H.
template <typename FieldT, typename Precond, typename Energy, typename Ham>
GroundState<FieldT> run_flow(FieldT psi, const FlowConfig& cfg, Precond&& precond,
                             Energy&& energy, Ham&& hamiltonian) {
  cfg.validate();
  normalize(psi);
  GroundState<FieldT> out{psi, 0.0, energy(psi), 0.0, 0, {}};
  out.energies.push_back(out.energy);
  auto residual_of = [&](const FieldT& f, double& mu) {
    const FieldT h = hamiltonian(f);
    mu = std::real(inner(f, h));
    FieldT r = h;
    r.axpy(cplx(-mu, 0.0), f);
    return l2_norm(r);
  };
  for (int it = 1; it <= cfg.max_iters; ++it) {
    FieldT r = hamiltonian(psi);
    r.axpy(cplx(-std::real(inner(psi, r)), 0.0), psi);
    psi.axpy(cplx(-2.0 * cfg.dtau, 0.0), precond(r));
    normalize(psi);
    if (!psi.all_finite()) throw InstabilityError(it * cfg.dtau);
    const double e = energy(psi);
    const double prev = out.energies.back();
    out.energies.push_back(e);
    const double rel = std::abs(prev - e) / std::max(std::abs(e), 1e-300);
    if (rel < cfg.tol) {
      double mu = 0.0;
      const double res = residual_of(psi, mu);
      if (cfg.residual_tol <= 0.0 || res < cfg.residual_tol) {
        out.psi = std::move(psi);
        out.mu = mu;
        out.energy = e;
        out.residual = res;
        out.iterations = it;
        return out;
      }
    }
  }
  throw ConvergenceError("gradient flow did not converge within max_iters",
                         format_trace(out.energies));
}

}  // namespace

void FlowConfig::validate() const {
  if (!(dtau > 0.0)) throw ConfigurationError("guard dtau > 0 violated");
  if (!(tol > 0.0)) throw ConfigurationError("guard tol > 0 violated");
  if (max_iters < 1) throw ConfigurationError("guard max_iters >= 1 violated");
}

Field1D energy_gradient_1d(const Field1D& phi, const Model1D& model) {
  Field1D g = model.apply_hamiltonian(phi);
  g *= cplx(2.0, 0.0);
  return g;
}

Field2D energy_gradient_2d(const Field2D& psi, const Model2D& model) {
  Field2D g = model.apply_hamiltonian(psi);
  g *= cplx(2.0, 0.0);
  return g;
}

GroundState1D ground_state_1d(const Model1D& model, const FlowConfig& cfg,
                              std::optional<Field1D> initial) {
  const Params1D& p = model.params();
  if (!p.trap_on && p.g_tilde > 0.0 && p.beta == 0.0) {
    throw ConfigurationError(
        "guard quintic term present (beta != 0) for an untrapped focusing flow violated");
  }
  const Grid1D& grid = model.grid();
  Field1D phi = initial ? std::move(*initial) : oscillator_ground_state(grid);
  const auto k = grid.wavenumbers();
  std::vector<cplx> precond(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) precond[i] = 1.0 / (1.0 + 2.0 * cfg.dtau * k[i] * k[i]);
  return run_flow(
      std::move(phi), cfg, [&](const Field1D& f) { return model.spectral().apply_multiplier(f, precond); },
      [&](const Field1D& f) { return energy_1d(f, model); },
      [&](const Field1D& f) { return model.apply_hamiltonian(f); });
}

double default_dtau_2d(const Model2D& model) {
  double vmax = 0.0;
  for (double v : model.potential().values()) vmax = std::max(vmax, std::abs(v));
  return vmax > 0.0 ? std::min(1e-3, 0.5 / vmax) : 1e-3;
}

GroundState2D ground_state_2d(const Model2D& model, const FlowConfig& cfg,
                              std::optional<Field2D> initial) {
  const Grid2D& grid = model.grid();
  const double eps = model.params().eps;
  Field2D psi = initial ? std::move(*initial) : sample<cplx>(grid, [eps](double x, double y) {
    return std::exp(-0.5 * x * x - 0.5 * y * y / eps);
  });
  const auto k2 = model.spectral().k_squared();
  std::vector<cplx> precond(k2.size());
  for (std::size_t i = 0; i < k2.size(); ++i) precond[i] = 1.0 / (1.0 + 2.0 * cfg.dtau * k2[i]);
  return run_flow(
      std::move(psi), cfg, [&](const Field2D& f) { return model.spectral().apply_multiplier(f, precond); },
      [&](const Field2D& f) { return energy_2d(f, model); },
      [&](const Field2D& f) { return model.apply_hamiltonian(f); });
}

}  // namespace csswg
