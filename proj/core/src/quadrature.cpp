#include "csswg/quadrature.hpp"

#include <array>
#include <cmath>
#include <numeric>

#include "csswg/fft.hpp"

namespace csswg {

namespace {

template <typename F>
auto sum_of(const F& f) {
  typename F::value_type s{};
  for (const auto& v : f.values()) s += v;
  return s;
}

double cell(const Grid1D& g) { return g.spacing(); }
double cell(const Grid2D& g) { return g.cell_area(); }

template <typename G>
cplx inner_impl(const BasicField<G, cplx>& f, const BasicField<G, cplx>& g) {
  f.require_same_grid(g);
  cplx s{};
  for (std::size_t i = 0; i < f.size(); ++i) s += std::conj(f[i]) * g[i];
  return s * cell(f.grid());
}

template <typename G>
double norm_impl(const BasicField<G, cplx>& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += std::norm(v);
  return std::sqrt(s * cell(f.grid()));
}

template <typename G>
double norm_impl(const BasicField<G, double>& f) {
  double s = 0.0;
  for (const auto& v : f.values()) s += v * v;
  return std::sqrt(s * cell(f.grid()));
}

constexpr int kStencil = 8;

// Weights w[o][j]: integral over [o, o+1] of the Lagrange basis polynomial
// l_j on the nodes 0..kStencil-1.
std::array<std::array<double, kStencil>, kStencil - 1> make_cell_weights() {
  std::array<std::array<double, kStencil>, kStencil - 1> w{};
  for (int j = 0; j < kStencil; ++j) {
    // coefficients of l_j, lowest degree first
    std::array<double, kStencil> c{};
    c[0] = 1.0;
    int deg = 0;
    double denom = 1.0;
    for (int m = 0; m < kStencil; ++m) {
      if (m == j) continue;
      // multiply by (t - m)
      for (int d = deg + 1; d >= 1; --d) c[d] = c[d - 1] - m * c[d];
      c[0] = -m * c[0];
      ++deg;
      denom *= (j - m);
    }
    for (int o = 0; o < kStencil - 1; ++o) {
      double integral = 0.0;
      for (int d = 0; d < kStencil; ++d) {
        integral += c[d] / (d + 1) * (std::pow(o + 1.0, d + 1) - std::pow(double(o), d + 1));
      }
      w[o][j] = integral / denom;
    }
  }
  return w;
}

const auto& cell_weights() {
  static const auto w = make_cell_weights();
  return w;
}

}  // namespace

double integrate(const RealField1D& f) { return sum_of(f) * f.grid().spacing(); }
double integrate(const RealField2D& f) { return sum_of(f) * f.grid().cell_area(); }
cplx integrate(const Field1D& f) { return sum_of(f) * f.grid().spacing(); }
cplx integrate(const Field2D& f) { return sum_of(f) * f.grid().cell_area(); }

cplx inner(const Field1D& f, const Field1D& g) { return inner_impl(f, g); }
cplx inner(const Field2D& f, const Field2D& g) { return inner_impl(f, g); }

double l2_norm(const Field1D& f) { return norm_impl(f); }
double l2_norm(const Field2D& f) { return norm_impl(f); }
double l2_norm(const RealField1D& f) { return norm_impl(f); }
double l2_norm(const RealField2D& f) { return norm_impl(f); }

std::vector<double> antiderivative(std::span<const double> g, const Grid1D& grid) {
  const int n = grid.size();
  if (static_cast<int>(g.size()) != n) throw DimensionError("antiderivative: size mismatch");
  const double mean = std::accumulate(g.begin(), g.end(), 0.0) / n;

  FftPlan fft(n);
  auto buf = fft.buffer();
  for (int i = 0; i < n; ++i) buf[i] = g[i] - mean;
  fft.forward();
  const auto k = grid.wavenumbers();
  buf[0] = 0.0;
  buf[grid.nyquist()] = 0.0;
  for (int i = 1; i < n; ++i) {
    if (i != grid.nyquist()) buf[i] /= cplx(0.0, k[i]);
  }
  fft.backward();

  std::vector<double> out(n);
  const double p0 = buf[0].real() / n;
  for (int i = 0; i < n; ++i) {
    out[i] = mean * (grid.point(i) + grid.half_width()) + buf[i].real() / n - p0;
  }
  return out;
}

std::vector<double> sign_convolution(std::span<const double> g, const Grid1D& grid) {
  auto c = antiderivative(g, grid);
  const double total = std::accumulate(g.begin(), g.end(), 0.0) * grid.spacing();
  for (auto& v : c) v = 2.0 * v - total;
  return c;
}

RealField2D sign_convolution_y(const RealField2D& g) {
  const Grid2D& grid = g.grid();
  const int nx = grid.nx();
  const int ny = grid.ny();
  RealField2D out(grid);
  std::vector<double> column(ny);
  for (int ix = 0; ix < nx; ++ix) {
    for (int iy = 0; iy < ny; ++iy) column[iy] = g.at(iy, ix);
    const auto s = sign_convolution(column, grid.y());
    for (int iy = 0; iy < ny; ++iy) out.at(iy, ix) = s[iy];
  }
  return out;
}

std::vector<double> cumulative_integral(std::span<const double> g, double h) {
  const int n = static_cast<int>(g.size());
  if (n < kStencil) throw DimensionError("cumulative_integral: need at least 8 samples");
  const auto& w = cell_weights();
  std::vector<double> out(n, 0.0);
  double acc = 0.0;
  for (int i = 0; i + 1 < n; ++i) {
    const int start = std::clamp(i - kStencil / 2 + 1, 0, n - kStencil);
    const auto& wi = w[i - start];
    double s = 0.0;
    for (int j = 0; j < kStencil; ++j) s += wi[j] * g[start + j];
    acc += h * s;
    out[i + 1] = acc;
  }
  return out;
}

RealField2D cumulative_integral_x(const RealField2D& g) {
  const Grid2D& grid = g.grid();
  RealField2D out(grid);
  const int nx = grid.nx();
  const double L = grid.x().half_width();
  std::vector<double> window(nx);
  for (int ix = 0; ix < nx; ++ix) {
    window[ix] = 0.5 * std::erfc((std::abs(grid.x().point(ix)) - 0.6 * L) / (0.08 * L));
  }
  std::vector<double> inner(nx), outer(nx);
  for (int iy = 0; iy < grid.ny(); ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      inner[ix] = window[ix] * g.at(iy, ix);
      outer[ix] = g.at(iy, ix) - inner[ix];
    }
    const auto a = antiderivative(inner, grid.x());
    const auto b = cumulative_integral(outer, grid.dx());
    for (int ix = 0; ix < nx; ++ix) out.at(iy, ix) = a[ix] + b[ix];
  }
  return out;
}

}  // namespace csswg
