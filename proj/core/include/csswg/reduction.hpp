#pragma once

#include <optional>
#include <vector>

#include "csswg/dynamics1d.hpp"
#include "csswg/dynamics2d.hpp"
#include "csswg/observables.hpp"

namespace csswg {

/// Transverse ground state u_eps and f = int sgn(y - y') u_eps^2(y') dy' on the y-axis.
struct TransverseProfile {
  double eps = 0.0;
  Grid1D grid;
  std::vector<double> u;
  std::vector<double> f;
  /// max |f - erf(y / sqrt(eps))| over the grid.
  double erf_deviation = 0.0;
};

/// Samples u_eps and f. Guards: Ly >= 6 sqrt(eps) and dy <= sqrt(eps)/4.
TransverseProfile build_profile(double eps, const Grid1D& y_grid);

/// Validated reduction grid: [-Lx, Lx) x [-Ly, Ly) with Ly = ly_factor sqrt(eps).
Grid2D reference_grid(double eps, int nx = 256, int ny = 64, double Lx = 16.0,
                      double ly_factor = 8.0);

/// The quasi-1D ansatz and its projection for one confinement strength.
///
/// Owns a GaugeSolver; one instance per thread.
class Reduction {
 public:
  Reduction(const Grid2D& grid, double eps, GaugeBoundary boundary = GaugeBoundary::FreeSpace);

  const Grid2D& grid() const noexcept { return grid_; }
  const TransverseProfile& profile() const noexcept { return profile_; }
  const GaugeSolver& gauge() const noexcept { return gauge_; }
  double eps() const noexcept { return profile_.eps; }

  /// beta S for the ansatz density |phi(x)|^2 u_eps(y)^2.
  RealField2D ansatz_phase(const Field1D& phi, double beta) const;

  /// Psi = phi(x) u_eps(y) e^{-i beta S}.
  Field2D build_ansatz(const Field1D& phi, double beta) const;

  /// phi(x) = int Psi e^{i beta S} u_eps dy with beta S from the instantaneous |Psi|^2.
  Field1D project(const Field2D& psi, double beta) const;

  /// Same projection with a caller-supplied (e.g. frozen) phase beta S.
  Field1D project_with_phase(const Field2D& psi, const RealField2D& beta_s) const;

  /// d/dt of project(Psi(t)) given Psi and dPsi/dt: the projected time derivative
  /// plus the contribution from the time dependence of beta S.
  Field1D project_derivative(const Field2D& psi, const Field2D& dpsi, double beta) const;

 private:
  Grid2D grid_;
  TransverseProfile profile_;
  GaugeSolver gauge_;
};

Field2D build_ansatz(const Field1D& phi, const TransverseProfile& profile, double beta);
Field1D project_to_1d(const Field2D& psi, const TransverseProfile& profile, double beta);

/// -i applied to the effective cubic-quintic Hamiltonian (trap on).
Field1D rhs_1d_reference(const Field1D& phi, double beta, double g_tilde);

/// One row of the RHS-consistency table.
struct ConsistencyRow {
  double eps = 0.0;
  double beta = 0.0;
  double g = 0.0;
  /// || project(rhs_2d(ansatz)) - rhs_1d(phi) ||, phase frozen in time.
  double residual = 0.0;
  /// Same with the time derivative of beta S included.
  double residual_full = 0.0;
  /// Least-squares coefficient of |phi|^4 phi in i * (full projected derivative).
  double quintic_fit = 0.0;
  /// Same with the current term and the phase-rate term removed.
  double quintic_fit_no_current = 0.0;
  double runtime_s = 0.0;
};

ConsistencyRow rhs_consistency(const Field1D& phi, double beta, double g, double eps,
                               int ny = 64);

std::vector<ConsistencyRow> rhs_consistency_residual(const Field1D& phi, double beta, double g,
                                                     const std::vector<double>& eps_list,
                                                     int ny = 64);

/// Side-by-side 2D/1D evolution from the ansatz of phi0.
struct ReduceOptions {
  double beta = 0.0;
  double g = 0.0;
  double eps = 0.1;
  double dt = 1e-3;
  double t_end = 1.0;
  int nx = 256;
  int ny = 64;
  double Lx = 16.0;
  double ly_factor = 8.0;  ///< Ly = ly_factor sqrt(eps)
  /// Sample the error and diagnostics every this many steps.
  int sample_stride = 10;
  /// Align the projected field to the 1D one by the phase of their overlap.
  bool align_phase = false;
  Integrator integrator = Integrator::LawsonRK4;
};

struct ReduceSample {
  Diagnostics diag2d;
  Diagnostics diag1d;
};

struct ReduceResult {
  double eps = 0.0;
  double sup_error = 0.0;
  std::vector<ReduceSample> samples;
  double mass_drift_2d = 0.0;    ///< max relative mass drift
  double energy_drift_2d = 0.0;  ///< max relative energy drift
  double mass_drift_1d = 0.0;
  double energy_drift_1d = 0.0;
  double max_continuity = 0.0;
  double runtime_s = 0.0;
  std::optional<Field2D> final_2d;
  std::optional<Field1D> final_1d;
};

/// Optional hook called at every sample with both states.
using ReduceObserver = std::function<void(double t, const Field2D&, const Field1D&)>;

ReduceResult reduce_leg(const Field1D& phi0, const ReduceOptions& options,
                        const ReduceObserver& observer = {});

}  // namespace csswg
