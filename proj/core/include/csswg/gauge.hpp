#pragma once

#include <memory>
#include <utility>

#include "csswg/field.hpp"
#include "csswg/spectral.hpp"

namespace csswg {

/// How the long-range kernel grad_perp(w0), w0 = -log|x|, is evaluated.
enum class GaugeBoundary {
  /// Open-plane convolution: truncated-kernel spectral method on a padded
  /// grid. Exact up to spectral accuracy for densities supported in the box.
  FreeSpace,
  /// Periodic proxy with the k = 0 mode removed; curl A = 2 pi beta (rho - mean rho).
  Periodic,
};

/// Everything the two gauges need for one density.
struct GaugeBundle {
  VectorField2D A;      ///< Coulomb gauge, div A = 0, curl A = 2 pi beta rho
  VectorField2D T;      ///< wave-guide gauge, T_y = 0
  RealField2D beta_s;   ///< beta * S with grad(beta S) = A - T
  RealField2D rho;      ///< |psi|^2
};

/// Evaluates the Chern-Simons gauge objects on a fixed grid.
///
/// Owns FFT work buffers, so one instance serves one thread. Construction
/// precomputes the kernel spectrum; reuse the solver across time steps.
class GaugeSolver {
 public:
  explicit GaugeSolver(const Grid2D& grid, GaugeBoundary boundary = GaugeBoundary::FreeSpace);
  ~GaugeSolver();
  GaugeSolver(GaugeSolver&&) noexcept;
  GaugeSolver& operator=(GaugeSolver&&) noexcept;

  const Grid2D& grid() const noexcept;
  GaugeBoundary boundary() const noexcept;
  /// Shape [ny][nx] of the convolution grid (equal to the box grid when periodic).
  std::pair<int, int> convolution_shape() const noexcept;

  /// A = beta grad_perp(w0) * rho. Rejects densities below -1e-12 and clamps
  /// the remaining round-off negatives to zero.
  VectorField2D vector_potential(const RealField2D& rho, double beta) const;
  /// Same operator for a signed source (e.g. a density rate); no validation.
  VectorField2D vector_potential_of_source(const RealField2D& source, double beta) const;

  /// Scalar (grad_perp w0) * J = int grad_perp w0(x - y) . J(y) dy.
  RealField2D current_potential(const VectorField2D& current) const;

  /// curl A evaluated on the convolution grid and restricted to the box.
  RealField2D flux_density(const RealField2D& rho, double beta) const;

  /// beta S for S = S0 * rho with S0 = arctan(y/x); works for signed sources.
  ///
  /// Free space: beta S0 * rho is summed directly on the left edge column
  /// (where rho vanishes and the kernel is smooth) and continued inward by
  /// integrating A_x - T_x along x. Periodic: spectral inversion of A - T.
  RealField2D gauge_phase(const RealField2D& rho, double beta) const;

  GaugeBundle bundle(const Field2D& psi, double beta) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Coulomb-gauge potential; thin wrapper over GaugeSolver::vector_potential.
VectorField2D compute_A(const RealField2D& rho, double beta, const GaugeSolver& solver);

/// T_x(x, y) = -pi beta int sgn(y - y') rho(x, y') dy', T_y = 0.
VectorField2D compute_T(const RealField2D& rho, double beta);

/// Least-squares solution of grad(beta S) = A - T on the periodic box:
/// (beta S)^(k) = -i k.(A^ - T^)(k) / |k|^2, zero mode 0.
RealField2D compute_betaS(const VectorField2D& A, const VectorField2D& T);

/// J = Re[ conj(psi) (-i grad + a) psi ], for either gauge potential.
VectorField2D compute_current(const Field2D& psi, const VectorField2D& a,
                              const Spectral2D& spectral);
VectorField2D compute_current(const Field2D& psi, const VectorField2D& a);

/// Current in the Coulomb gauge, J = Re[ conj(Psi) (-i grad + A) Psi ].
inline VectorField2D compute_current_A(const Field2D& psi, const VectorField2D& A) {
  return compute_current(psi, A);
}

/// Current in the wave-guide gauge, j = Re[ conj(psi) (-i grad + T) psi ].
inline VectorField2D compute_current_T(const Field2D& psi, const VectorField2D& T) {
  return compute_current(psi, T);
}

/// Validates a density and clamps tiny negatives; throws InputError below -1e-12.
RealField2D checked_density(const RealField2D& rho);

}  // namespace csswg
