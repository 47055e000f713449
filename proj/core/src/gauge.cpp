#include "csswg/gauge.hpp"

#include <math.h>

#include <cmath>
#include <numbers>
#include <tuple>
#include <algorithm>
#include <vector>

#include "csswg/fft.hpp"
#include "csswg/quadrature.hpp"

namespace csswg {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegativeDensityTolerance = 1e-12;

// DFT-ordered wavenumbers for n samples with spacing h; Nyquist zeroed when odd_use.
std::vector<double> wavenumbers(int n, double h, bool odd_use) {
  std::vector<double> k(static_cast<std::size_t>(n));
  const double dk = 2.0 * kPi / (n * h);
  for (int j = 0; j < n; ++j) k[j] = dk * (j < n / 2 ? j : j - n);
  if (odd_use) k[n / 2] = 0.0;
  return k;
}

// Fourier transform of -log|x| truncated to the disc of radius L.
double truncated_log_kernel(double s, double L) {
  if (s == 0.0) return 2.0 * kPi * L * L / 4.0 * (1.0 - 2.0 * std::log(L));
  const double ls = L * s;
  return 2.0 * kPi *
         ((1.0 - ::j0(ls)) / (s * s) -
          L * std::log(L) * ::j1(ls) / s);
}

}  // namespace

struct GaugeSolver::Impl {
  Grid2D grid;
  GaugeBoundary boundary;
  int py = 0;
  int px = 0;
  std::vector<double> kernel;  // [py][px]
  std::vector<double> kx;      // odd-use wavenumbers of the convolution grid
  std::vector<double> ky;
  std::vector<double> edge_kernel;  // arctan((y_i - y_j)/(x_0 - x_l)) by [i - j + ny - 1][l]
  FftPlan fft;
  std::vector<cplx> scratch;

  Impl(const Grid2D& g, GaugeBoundary bc)
      : grid(g), boundary(bc), fft(shape(g, bc).first, shape(g, bc).second) {
    std::tie(py, px) = shape(g, bc);
    kx = wavenumbers(px, g.dx(), true);
    ky = wavenumbers(py, g.dy(), true);
    const auto kx_full = wavenumbers(px, g.dx(), false);
    const auto ky_full = wavenumbers(py, g.dy(), false);
    kernel.resize(static_cast<std::size_t>(px) * py);
    const double L = truncation_radius(g);
    for (int iy = 0; iy < py; ++iy) {
      for (int ix = 0; ix < px; ++ix) {
        const double k2 = kx_full[ix] * kx_full[ix] + ky_full[iy] * ky_full[iy];
        double w = 0.0;
        if (bc == GaugeBoundary::FreeSpace) {
          w = truncated_log_kernel(std::sqrt(k2), L);
        } else if (k2 > 0.0) {
          w = 2.0 * kPi / k2;
        }
        kernel[static_cast<std::size_t>(iy) * px + ix] = w;
      }
    }
    scratch.resize(kernel.size());

    if (bc == GaugeBoundary::FreeSpace) {
      const int nx = g.nx();
      const int ny = g.ny();
      const auto xs = g.x().points();
      edge_kernel.resize(static_cast<std::size_t>(2 * ny - 1) * nx, 0.0);
      for (int d = -(ny - 1); d <= ny - 1; ++d) {
        const double dy = d * g.dy();
        for (int l = 1; l < nx; ++l) {
          edge_kernel[static_cast<std::size_t>(d + ny - 1) * nx + l] =
              std::atan(dy / (xs[0] - xs[l]));
        }
      }
    }
  }

  static double truncation_radius(const Grid2D& g) {
    // Slightly above the box diameter so every source-target pair sees the full kernel.
    return 1.02 * std::hypot(g.x().length(), g.y().length());
  }

  static std::pair<int, int> shape(const Grid2D& g, GaugeBoundary bc) {
    if (bc == GaugeBoundary::Periodic) return {g.ny(), g.nx()};
    const double L = truncation_radius(g);
    const int nx = static_cast<int>(std::ceil((g.x().length() + L) / g.dx()));
    const int ny = static_cast<int>(std::ceil((g.y().length() + L) / g.dy()));
    return {next_fast_size(ny), next_fast_size(nx)};
  }

  std::size_t pidx(int iy, int ix) const {
    return static_cast<std::size_t>(iy) * px + ix;
  }

  // Zero-padded copy of re + i*im into the FFT buffer, then forward transform.
  void load_forward(const RealField2D& re, const RealField2D* im) {
    auto buf = fft.buffer();
    std::fill(buf.begin(), buf.end(), cplx{});
    for (int iy = 0; iy < grid.ny(); ++iy) {
      for (int ix = 0; ix < grid.nx(); ++ix) {
        const double b = im ? im->at(iy, ix) : 0.0;
        buf[pidx(iy, ix)] = cplx(re.at(iy, ix), b);
      }
    }
    fft.forward();
  }

  // Inverse transform and restriction to the box; returns (re, im) scaled.
  VectorField2D backward_restrict() {
    fft.backward();
    const double scale = 1.0 / (static_cast<double>(px) * py);
    auto buf = fft.buffer();
    VectorField2D out(grid);
    for (int iy = 0; iy < grid.ny(); ++iy) {
      for (int ix = 0; ix < grid.nx(); ++ix) {
        const cplx v = buf[pidx(iy, ix)] * scale;
        out.x.at(iy, ix) = v.real();
        out.y.at(iy, ix) = v.imag();
      }
    }
    return out;
  }

  VectorField2D vector_potential(const RealField2D& source, double beta) {
    load_forward(source, nullptr);
    auto buf = fft.buffer();
    // A_x + i A_y has spectrum beta W (k_x + i k_y) rho^.
    for (int iy = 0; iy < py; ++iy) {
      for (int ix = 0; ix < px; ++ix) {
        const std::size_t i = pidx(iy, ix);
        buf[i] *= beta * kernel[i] * cplx(kx[ix], ky[iy]);
      }
    }
    return backward_restrict();
  }

  RealField2D current_potential(const VectorField2D& J) {
    load_forward(J.x, &J.y);
    auto buf = fft.buffer();
    std::copy(buf.begin(), buf.end(), scratch.begin());
    const cplx I(0.0, 1.0);
    for (int iy = 0; iy < py; ++iy) {
      const int my = (py - iy) % py;
      for (int ix = 0; ix < px; ++ix) {
        const int mx = (px - ix) % px;
        const cplx z = scratch[pidx(iy, ix)];
        const cplx zm = std::conj(scratch[pidx(my, mx)]);
        const cplx jx = 0.5 * (z + zm);
        const cplx jy = (z - zm) / (2.0 * I);
        const std::size_t i = pidx(iy, ix);
        buf[i] = kernel[i] * I * (ky[iy] * jx - kx[ix] * jy);
      }
    }
    return backward_restrict().x;
  }

  RealField2D flux_density(const RealField2D& rho, double beta) {
    load_forward(rho, nullptr);
    auto buf = fft.buffer();
    for (int iy = 0; iy < py; ++iy) {
      for (int ix = 0; ix < px; ++ix) {
        const std::size_t i = pidx(iy, ix);
        buf[i] *= beta * kernel[i] * (kx[ix] * kx[ix] + ky[iy] * ky[iy]);
      }
    }
    return backward_restrict().x;
  }

  // beta S from a source and its potentials A and T.
  RealField2D phase(const RealField2D& rho, double beta, const VectorField2D& A,
                    const VectorField2D& T) const {
    if (boundary == GaugeBoundary::Periodic) return compute_betaS(A, T);
    const int nx = grid.nx();
    const int ny = grid.ny();
    std::vector<double> edge(static_cast<std::size_t>(ny), 0.0);
    for (int i = 0; i < ny; ++i) {
      double sum = 0.0;
      for (int j = 0; j < ny; ++j) {
        const double* row = &edge_kernel[static_cast<std::size_t>(i - j + ny - 1) * nx];
        for (int l = 1; l < nx; ++l) sum += row[l] * rho.at(j, l);
      }
      edge[i] = beta * sum * grid.cell_area();
    }
    RealField2D out = cumulative_integral_x(A.x - T.x);
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) out.at(iy, ix) += edge[iy];
    }
    return out;
  }
};

GaugeSolver::GaugeSolver(const Grid2D& grid, GaugeBoundary boundary)
    : impl_(std::make_unique<Impl>(grid, boundary)) {}
GaugeSolver::~GaugeSolver() = default;
GaugeSolver::GaugeSolver(GaugeSolver&&) noexcept = default;
GaugeSolver& GaugeSolver::operator=(GaugeSolver&&) noexcept = default;

const Grid2D& GaugeSolver::grid() const noexcept { return impl_->grid; }
GaugeBoundary GaugeSolver::boundary() const noexcept { return impl_->boundary; }
std::pair<int, int> GaugeSolver::convolution_shape() const noexcept {
  return {impl_->py, impl_->px};
}

VectorField2D GaugeSolver::vector_potential(const RealField2D& rho, double beta) const {
  return vector_potential_of_source(checked_density(rho), beta);
}

VectorField2D GaugeSolver::vector_potential_of_source(const RealField2D& source,
                                                      double beta) const {
  if (!(source.grid() == impl_->grid)) throw DimensionError("gauge: grid mismatch");
  return impl_->vector_potential(source, beta);
}

RealField2D GaugeSolver::current_potential(const VectorField2D& current) const {
  if (!(current.grid() == impl_->grid)) throw DimensionError("gauge: grid mismatch");
  return impl_->current_potential(current);
}

RealField2D GaugeSolver::flux_density(const RealField2D& rho, double beta) const {
  if (!(rho.grid() == impl_->grid)) throw DimensionError("gauge: grid mismatch");
  return impl_->flux_density(rho, beta);
}

RealField2D GaugeSolver::gauge_phase(const RealField2D& rho, double beta) const {
  const VectorField2D A = vector_potential_of_source(rho, beta);
  const VectorField2D T = compute_T(rho, beta);
  return impl_->phase(rho, beta, A, T);
}

GaugeBundle GaugeSolver::bundle(const Field2D& psi, double beta) const {
  RealField2D rho = abs_squared(psi);
  VectorField2D A = vector_potential(rho, beta);
  VectorField2D T = compute_T(rho, beta);
  RealField2D s = impl_->phase(rho, beta, A, T);
  return GaugeBundle{std::move(A), std::move(T), std::move(s), std::move(rho)};
}

VectorField2D compute_A(const RealField2D& rho, double beta, const GaugeSolver& solver) {
  return solver.vector_potential(rho, beta);
}

VectorField2D compute_T(const RealField2D& rho, double beta) {
  RealField2D tx = sign_convolution_y(rho);
  tx *= -kPi * beta;
  return VectorField2D(std::move(tx), RealField2D(rho.grid()));
}

RealField2D compute_betaS(const VectorField2D& A, const VectorField2D& T) {
  const Grid2D& g = A.grid();
  if (!(T.grid() == g)) throw DimensionError("compute_betaS: grid mismatch");
  Spectral2D spectral(g);
  const VectorField2D d(A.x - T.x, A.y - T.y);
  const RealField2D divergence = spectral.div(d);
  std::vector<cplx> m(g.size());
  const auto k2 = spectral.k_squared();
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = k2[i] > 0.0 ? -1.0 / k2[i] : 0.0;
  return real_part(spectral.apply_multiplier(to_complex(divergence), m));
}

VectorField2D compute_current(const Field2D& psi, const VectorField2D& a,
                              const Spectral2D& spectral) {
  if (!(psi.grid() == a.grid())) throw DimensionError("compute_current: grid mismatch");
  const auto [gx, gy] = spectral.gradient(psi);
  VectorField2D J(psi.grid());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double r = std::norm(psi[i]);
    J.x[i] = std::imag(std::conj(psi[i]) * gx[i]) + a.x[i] * r;
    J.y[i] = std::imag(std::conj(psi[i]) * gy[i]) + a.y[i] * r;
  }
  return J;
}

VectorField2D compute_current(const Field2D& psi, const VectorField2D& a) {
  return compute_current(psi, a, Spectral2D(psi.grid()));
}

RealField2D checked_density(const RealField2D& rho) {
  RealField2D out = rho;
  for (auto& v : out.values()) {
    if (!std::isfinite(v) || v < -kNegativeDensityTolerance) {
      throw InputError("density has negative or non-finite samples");
    }
    if (v < 0.0) v = 0.0;
  }
  return out;
}

}  // namespace csswg
