#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace csswg {

/// Uniform periodic sampling of [-L, L) with n points.
///
/// Wavenumbers follow the usual DFT ordering 0, 1, ..., n/2-1, -n/2, ..., -1
/// (times pi/L). The Nyquist entry is stored as -n/2.
class Grid1D {
 public:
  Grid1D(int n, double half_width);

  int size() const noexcept { return n_; }
  double half_width() const noexcept { return half_width_; }
  double length() const noexcept { return 2.0 * half_width_; }
  double spacing() const noexcept { return spacing_; }
  double point(int i) const noexcept { return -half_width_ + spacing_ * i; }

  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> wavenumbers() const noexcept { return wavenumbers_; }

  /// Index of the Nyquist mode, n/2.
  int nyquist() const noexcept { return n_ / 2; }

  bool operator==(const Grid1D& other) const noexcept {
    return n_ == other.n_ && half_width_ == other.half_width_;
  }

 private:
  int n_;
  double half_width_;
  double spacing_;
  std::vector<double> points_;
  std::vector<double> wavenumbers_;
};

/// Tensor-product box [-Lx, Lx) x [-Ly, Ly); samples are row-major [ny][nx].
class Grid2D {
 public:
  Grid2D(int nx, int ny, double half_width_x, double half_width_y);
  Grid2D(Grid1D x_axis, Grid1D y_axis);

  const Grid1D& x() const noexcept { return x_; }
  const Grid1D& y() const noexcept { return y_; }

  int nx() const noexcept { return x_.size(); }
  int ny() const noexcept { return y_.size(); }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(nx()) * static_cast<std::size_t>(ny());
  }
  double dx() const noexcept { return x_.spacing(); }
  double dy() const noexcept { return y_.spacing(); }
  double cell_area() const noexcept { return dx() * dy(); }

  std::size_t index(int iy, int ix) const noexcept {
    return static_cast<std::size_t>(iy) * static_cast<std::size_t>(nx()) +
           static_cast<std::size_t>(ix);
  }

  bool operator==(const Grid2D& other) const noexcept {
    return x_ == other.x_ && y_ == other.y_;
  }

 private:
  Grid1D x_;
  Grid1D y_;
};

bool is_power_of_two(int n) noexcept;

}  // namespace csswg
