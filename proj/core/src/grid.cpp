#include "csswg/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "csswg/error.hpp"

namespace csswg {

bool is_power_of_two(int n) noexcept { return n > 0 && (n & (n - 1)) == 0; }

Grid1D::Grid1D(int n, double half_width) : n_(n), half_width_(half_width) {
  if (n < 8 || !is_power_of_two(n)) {
    std::ostringstream os;
    os << "grid size must be a power of two >= 8, got " << n;
    throw ConfigurationError(os.str());
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw ConfigurationError("grid half-width must be positive and finite");
  }
  spacing_ = 2.0 * half_width / n;
  points_.resize(n);
  wavenumbers_.resize(n);
  const double dk = std::numbers::pi / half_width;
  for (int i = 0; i < n; ++i) {
    points_[i] = point(i);
    const int m = (i < n / 2) ? i : i - n;
    wavenumbers_[i] = dk * m;
  }
}

Grid2D::Grid2D(int nx, int ny, double half_width_x, double half_width_y)
    : x_(nx, half_width_x), y_(ny, half_width_y) {}

Grid2D::Grid2D(Grid1D x_axis, Grid1D y_axis)
    : x_(std::move(x_axis)), y_(std::move(y_axis)) {}

}  // namespace csswg
