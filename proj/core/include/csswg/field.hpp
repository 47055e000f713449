#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "csswg/error.hpp"
#include "csswg/grid.hpp"

namespace csswg {

using cplx = std::complex<double>;

/// Samples of a scalar field on a 1D or 2D grid.
///
/// Fields are plain values: copying copies the samples, and every operation
/// below returns a new field. In 2D the samples are row-major [ny][nx].
template <typename GridT, typename T>
class BasicField {
 public:
  using grid_type = GridT;
  using value_type = T;

  explicit BasicField(GridT grid)
      : grid_(std::move(grid)), values_(sample_count(grid_), T{}) {}

  BasicField(GridT grid, std::vector<T> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != sample_count(grid_)) {
      throw DimensionError("field sample count does not match its grid");
    }
  }

  const GridT& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const T> values() const noexcept { return values_; }
  std::span<T> values() noexcept { return values_; }

  T& operator[](std::size_t i) noexcept { return values_[i]; }
  const T& operator[](std::size_t i) const noexcept { return values_[i]; }

  T& at(int iy, int ix) noexcept requires std::is_same_v<GridT, Grid2D> {
    return values_[grid_.index(iy, ix)];
  }
  const T& at(int iy, int ix) const noexcept requires std::is_same_v<GridT, Grid2D> {
    return values_[grid_.index(iy, ix)];
  }

  bool all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](const T& v) {
      if constexpr (std::is_same_v<T, cplx>) {
        return std::isfinite(v.real()) && std::isfinite(v.imag());
      } else {
        return std::isfinite(v);
      }
    });
  }

  BasicField& operator+=(const BasicField& o) {
    require_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  BasicField& operator-=(const BasicField& o) {
    require_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  BasicField& operator*=(const T& s) noexcept {
    for (auto& v : values_) v *= s;
    return *this;
  }

  /// this += s * o
  BasicField& axpy(const T& s, const BasicField& o) {
    require_same_grid(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += s * o.values_[i];
    return *this;
  }

  void require_same_grid(const BasicField& o) const {
    if (!(grid_ == o.grid_)) throw DimensionError("fields live on different grids");
  }

  template <typename OtherT>
  void require_same_grid(const BasicField<GridT, OtherT>& o) const {
    if (!(grid_ == o.grid())) throw DimensionError("fields live on different grids");
  }

 private:
  static std::size_t sample_count(const Grid1D& g) { return static_cast<std::size_t>(g.size()); }
  static std::size_t sample_count(const Grid2D& g) { return g.size(); }

  GridT grid_;
  std::vector<T> values_;
};

using Field1D = BasicField<Grid1D, cplx>;
using RealField1D = BasicField<Grid1D, double>;
using Field2D = BasicField<Grid2D, cplx>;
using RealField2D = BasicField<Grid2D, double>;

/// Pair of real components on a common grid; houses vector potentials and currents.
struct VectorField2D {
  RealField2D x;
  RealField2D y;

  explicit VectorField2D(const Grid2D& grid) : x(grid), y(grid) {}
  VectorField2D(RealField2D x_comp, RealField2D y_comp)
      : x(std::move(x_comp)), y(std::move(y_comp)) {
    x.require_same_grid(y);
  }
  const Grid2D& grid() const noexcept { return x.grid(); }
  bool all_finite() const noexcept { return x.all_finite() && y.all_finite(); }
};

template <typename G, typename T>
BasicField<G, T> operator+(BasicField<G, T> a, const BasicField<G, T>& b) {
  a += b;
  return a;
}
template <typename G, typename T>
BasicField<G, T> operator-(BasicField<G, T> a, const BasicField<G, T>& b) {
  a -= b;
  return a;
}
template <typename G, typename T>
BasicField<G, T> operator*(const T& s, BasicField<G, T> a) {
  a *= s;
  return a;
}

/// Pointwise product of two fields.
template <typename G, typename T, typename U>
auto pointwise_product(const BasicField<G, T>& a, const BasicField<G, U>& b) {
  a.require_same_grid(b);
  using R = decltype(T{} * U{});
  BasicField<G, R> out(a.grid());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

/// |f|^2 sample by sample.
template <typename G>
BasicField<G, double> abs_squared(const BasicField<G, cplx>& f) {
  BasicField<G, double> out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::norm(f[i]);
  return out;
}

template <typename G>
BasicField<G, cplx> to_complex(const BasicField<G, double>& f) {
  BasicField<G, cplx> out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  return out;
}

template <typename G>
BasicField<G, double> real_part(const BasicField<G, cplx>& f) {
  BasicField<G, double> out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
  return out;
}

/// Fill a 1D field from a function of x.
template <typename T, typename Fn>
BasicField<Grid1D, T> sample(const Grid1D& grid, Fn&& fn) {
  BasicField<Grid1D, T> out(grid);
  for (int i = 0; i < grid.size(); ++i) out[i] = static_cast<T>(fn(grid.point(i)));
  return out;
}

/// Fill a 2D field from a function of (x, y).
template <typename T, typename Fn>
BasicField<Grid2D, T> sample(const Grid2D& grid, Fn&& fn) {
  BasicField<Grid2D, T> out(grid);
  for (int iy = 0; iy < grid.ny(); ++iy) {
    const double y = grid.y().point(iy);
    for (int ix = 0; ix < grid.nx(); ++ix) {
      out.at(iy, ix) = static_cast<T>(fn(grid.x().point(ix), y));
    }
  }
  return out;
}

}  // namespace csswg
