#pragma once

#include <utility>
#include <vector>

#include "csswg/fft.hpp"
#include "csswg/field.hpp"

namespace csswg {

enum class Direction { Forward, Inverse };

/// Pseudospectral calculus on a periodic 1D grid.
///
/// Holds its own FFT work buffer, so an instance must not be shared between
/// threads. Odd derivatives zero the Nyquist mode.
class Spectral1D {
 public:
  explicit Spectral1D(const Grid1D& grid);

  const Grid1D& grid() const noexcept { return grid_; }

  /// Unitary DFT (1/sqrt(n) both ways).
  Field1D transform(const Field1D& f, Direction dir) const;
  Field1D derivative(const Field1D& f) const;
  Field1D second_derivative(const Field1D& f) const;
  /// inverse(m(k) * forward(f)) for a multiplier given per mode.
  Field1D apply_multiplier(const Field1D& f, std::span<const cplx> multiplier) const;

 private:
  Grid1D grid_;
  mutable FftPlan fft_;
};

/// Pseudospectral calculus on a periodic 2D grid; same threading contract as Spectral1D.
class Spectral2D {
 public:
  explicit Spectral2D(const Grid2D& grid);

  const Grid2D& grid() const noexcept { return grid_; }

  Field2D transform(const Field2D& f, Direction dir) const;

  struct Derivatives {
    Field2D dx;
    Field2D dy;
    Field2D laplacian;
  };
  /// Both first derivatives and the Laplacian from a single forward transform.
  Derivatives derivatives(const Field2D& f) const;

  std::pair<Field2D, Field2D> gradient(const Field2D& f) const;
  VectorField2D gradient(const RealField2D& f) const;
  Field2D laplacian(const Field2D& f) const;
  RealField2D curl(const VectorField2D& v) const;
  RealField2D div(const VectorField2D& v) const;
  /// d_x fx + d_y fy for complex components.
  Field2D divergence(const Field2D& fx, const Field2D& fy) const;

  Field2D apply_multiplier(const Field2D& f, std::span<const cplx> multiplier) const;

  /// Wavenumbers used for first derivatives (Nyquist zeroed).
  std::span<const double> kx_odd() const noexcept { return kx_odd_; }
  std::span<const double> ky_odd() const noexcept { return ky_odd_; }
  /// |k|^2 per mode in row-major [ny][nx] order.
  std::span<const double> k_squared() const noexcept { return k2_; }

 private:
  void load(const Field2D& f) const;
  void load(const RealField2D& f) const;
  Field2D unload(double scale) const;

  Grid2D grid_;
  std::vector<double> kx_odd_;
  std::vector<double> ky_odd_;
  std::vector<double> k2_;
  mutable FftPlan fft_;
  mutable std::vector<cplx> spectrum_;
};

Field1D spectral_transform(const Field1D& f, Direction dir);
Field2D spectral_transform(const Field2D& f, Direction dir);
std::pair<Field2D, Field2D> gradient(const Field2D& f);
RealField2D curl(const VectorField2D& v);
RealField2D div(const VectorField2D& v);

}  // namespace csswg
