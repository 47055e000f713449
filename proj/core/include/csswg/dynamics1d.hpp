#pragma once

#include <functional>
#include <vector>

#include "csswg/field.hpp"
#include "csswg/spectral.hpp"

namespace csswg {

struct Params1D {
  double beta = 0.0;
  /// Effective cubic coupling g / sqrt(2 pi eps).
  double g_tilde = 0.0;
  bool trap_on = true;
  double dt = 1e-3;
  double t_end = 0.0;

  /// Throws ConfigurationError naming the violated guard.
  void validate() const;
};

/// g int u_eps^4 dy = g / sqrt(2 pi eps).
double effective_coupling(double g, double eps);

/// pi^{-1/4} e^{-x^2/2}, the trapped oscillator ground state.
Field1D oscillator_ground_state(const Grid1D& grid);

/// The effective cubic-quintic Hamiltonian
/// -d_x^2 + x^2 (if trapped) + pi^2 beta^2 |phi|^4 - g_tilde |phi|^2.
class Model1D {
 public:
  Model1D(const Grid1D& grid, const Params1D& params);

  const Grid1D& grid() const noexcept { return grid_; }
  const Params1D& params() const noexcept { return params_; }
  const Spectral1D& spectral() const noexcept { return spectral_; }

  /// Pointwise potential x^2 + pi^2 beta^2 |phi|^4 - g_tilde |phi|^2.
  RealField1D local_potential(const Field1D& phi) const;
  Field1D apply_hamiltonian(const Field1D& phi) const;
  /// -i H phi.
  Field1D rhs(const Field1D& phi) const;

  /// One Strang step of size h (any sign): half potential, full kinetic, half potential.
  Field1D strang_step(const Field1D& phi, double h) const;

 private:
  Grid1D grid_;
  Params1D params_;
  Spectral1D spectral_;
  mutable double cached_h_ = 0.0;
  mutable std::vector<cplx> kinetic_;
};

struct State1D {
  Field1D psi;
  double t = 0.0;
  long steps = 0;
};

/// One step of size dt; throws InstabilityError on non-finite output.
void step_1d(const Model1D& model, State1D& state);

using Observer1D = std::function<void(const State1D&)>;

State1D evolve_1d(const Model1D& model, Field1D phi0, const Observer1D& observer = {},
                  int stride = 1);

}  // namespace csswg
