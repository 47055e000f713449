#pragma once

#include <optional>

#include "csswg/dynamics1d.hpp"
#include "csswg/dynamics2d.hpp"

namespace csswg {

/// One row of the diagnostics series.
struct Diagnostics {
  double t = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double boundary_mass = 0.0;
  std::optional<double> continuity_residual;
  std::optional<double> reduction_error;

  bool all_finite() const noexcept;
};

double mass(const Field1D& phi);
double mass(const Field2D& psi);

/// int |(-i grad + A) Psi|^2 + V_eps |Psi|^2 - (g/2) |Psi|^4, kinetic part in first-order form.
double energy_2d(const Field2D& psi, const Model2D& model);
double energy_2d(const Field2D& psi, const Params2D& params);

/// The same energy written in the wave-guide gauge: psi_t is the gauge-transformed
/// field Psi e^{i beta S}, and the kinetic part uses T instead of A.
double energy_2d_t_gauge(const Field2D& psi_t, const Model2D& model);

/// int |phi'|^2 + x^2 |phi|^2 (if trapped) + (pi^2 beta^2 / 3) |phi|^6 - (g_tilde/2) |phi|^4.
double energy_1d(const Field1D& phi, const Model1D& model);
double energy_1d(const Field1D& phi, const Params1D& params);

/// || (rho_next - rho_prev)/dt + 2 div J_mid || / max(||2 div J_mid||, ||rho_mid||),
/// with J_mid the mean of the currents of both states.
double continuity_residual(const Field2D& psi_prev, const Field2D& psi_next, double dt,
                           const Model2D& model);

/// |E1D[phi]| <= eta / eps.
bool energy_gap_check(const Field1D& phi, const Params1D& params, double eps, double eta = 0.1);

Diagnostics diagnose(const Field2D& psi, double t, const Model2D& model);
Diagnostics diagnose(const Field1D& phi, double t, const Model1D& model);

}  // namespace csswg
