#pragma once

#include <optional>
#include <vector>

#include "csswg/dynamics1d.hpp"
#include "csswg/dynamics2d.hpp"

namespace csswg {

struct FlowConfig {
  double dtau = 1e-3;
  /// Stop when the relative energy decrease per step falls below tol.
  double tol = 1e-13;
  int max_iters = 200000;
  /// When positive, additionally require || H phi - mu phi || < residual_tol.
  double residual_tol = 0.0;

  void validate() const;
};

template <typename FieldT>
struct GroundState {
  FieldT psi;
  double mu = 0.0;
  double energy = 0.0;
  double residual = 0.0;  ///< || H psi - mu psi ||
  int iterations = 0;
  std::vector<double> energies;
};

using GroundState1D = GroundState<Field1D>;
using GroundState2D = GroundState<Field2D>;

/// Energy gradients 2 H phi (H including all nonlinear terms).
Field1D energy_gradient_1d(const Field1D& phi, const Model1D& model);
Field2D energy_gradient_2d(const Field2D& psi, const Model2D& model);

/// Normalized gradient flow for the effective 1D energy.
///
/// Each step solves (1 + 2 dtau k^2) phi* = phi - 2 dtau (H + d_x^2) phi in
/// Fourier space and renormalizes phi* to unit mass.
GroundState1D ground_state_1d(const Model1D& model, const FlowConfig& cfg,
                              std::optional<Field1D> initial = std::nullopt);

/// The same flow for the 2D energy; the default start is the product of both
/// oscillator ground states.
GroundState2D ground_state_2d(const Model2D& model, const FlowConfig& cfg,
                              std::optional<Field2D> initial = std::nullopt);

/// Largest stable 2D pseudo-time step for the explicit potential part: min(1e-3, 0.5 / max V).
double default_dtau_2d(const Model2D& model);

}  // namespace csswg
