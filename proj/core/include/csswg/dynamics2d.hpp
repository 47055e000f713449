#pragma once

#include <functional>

#include "csswg/field.hpp"
#include "csswg/gauge.hpp"
#include "csswg/spectral.hpp"

namespace csswg {

enum class Integrator {
  /// RK4 in the interaction picture of the free Laplacian (integrating factor).
  LawsonRK4,
  /// Plain RK4 on the full right-hand side.
  ClassicalRK4,
};

struct Params2D {
  double beta = 0.0;
  double g = 0.0;
  double eps = 0.1;
  double dt = 1e-3;
  double t_end = 0.0;
  /// Include -2 beta ((grad_perp w0) * J) Psi in the Hamiltonian.
  bool current_term = true;
  /// Include V_eps; off only for diagnostics.
  bool trap_on = true;
  Integrator integrator = Integrator::LawsonRK4;
  GaugeBoundary boundary = GaugeBoundary::FreeSpace;
  /// Abort when max|Psi| on the outer ring exceeds this fraction of max|Psi|.
  double boundary_tolerance = 1e-6;

  /// Throws ConfigurationError naming the violated guard.
  void validate() const;
};

/// V_eps(x, y) = x^2 + y^2/eps^2 - 1/eps.
RealField2D trap_potential_2d(const Grid2D& grid, double eps);

/// max|Psi| on the outermost grid ring divided by max|Psi| (0 for Psi = 0).
double boundary_ratio(const Field2D& psi);

/// The trapped Chern-Simons-Schroedinger Hamiltonian on a fixed grid.
///
/// Holds FFT work buffers; one instance per thread.
class Model2D {
 public:
  Model2D(const Grid2D& grid, const Params2D& params);

  const Grid2D& grid() const noexcept { return grid_; }
  const Params2D& params() const noexcept { return params_; }
  const GaugeSolver& gauge() const noexcept { return gauge_; }
  const Spectral2D& spectral() const noexcept { return spectral_; }
  const RealField2D& potential() const noexcept { return potential_; }

  /// The individual pieces of H Psi; their sum is apply_hamiltonian(psi).
  struct Terms {
    Field2D kinetic;    ///< -Laplacian Psi
    Field2D magnetic;   ///< -2i A.grad Psi + |A|^2 Psi
    Field2D trap;       ///< V_eps Psi
    Field2D contact;    ///< -g |Psi|^2 Psi
    Field2D current;    ///< -2 beta ((grad_perp w0) * J) Psi
  };
  Terms hamiltonian_terms(const Field2D& psi) const;

  Field2D apply_hamiltonian(const Field2D& psi) const;

  /// -i H Psi. Checks finiteness and the boundary ring first.
  Field2D rhs(const Field2D& psi) const;

  /// -i (H + Laplacian) Psi: everything except the free kinetic part.
  Field2D nonlinear_rhs(const Field2D& psi) const;

  /// exp(i h Laplacian) Psi.
  Field2D free_propagate(const Field2D& psi, double h) const;

  /// Throws DomainOverflowError when boundary_ratio exceeds the tolerance.
  void check_boundary(const Field2D& psi) const;

 private:
  Field2D hamiltonian(const Field2D& psi, bool with_kinetic) const;

  Grid2D grid_;
  Params2D params_;
  GaugeSolver gauge_;
  Spectral2D spectral_;
  RealField2D potential_;
};

struct State2D {
  Field2D psi;
  double t = 0.0;
  long steps = 0;
};

/// One RK4 step of size dt; throws InstabilityError on non-finite output.
void step_2d(const Model2D& model, State2D& state);

using Observer2D = std::function<void(const State2D&)>;

/// Steps until t_end. The observer sees the initial state, every stride-th
/// state and the final state.
State2D evolve_2d(const Model2D& model, Field2D psi0, const Observer2D& observer = {},
                  int stride = 1);

}  // namespace csswg
