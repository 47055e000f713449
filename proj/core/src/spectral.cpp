#include "csswg/spectral.hpp"

#include <cmath>

namespace csswg {

namespace {

std::vector<double> odd_wavenumbers(const Grid1D& g) {
  std::vector<double> k(g.wavenumbers().begin(), g.wavenumbers().end());
  k[g.nyquist()] = 0.0;
  return k;
}

}  // namespace

// ---------------------------------------------------------------- Spectral1D

Spectral1D::Spectral1D(const Grid1D& grid) : grid_(grid), fft_(grid.size()) {}

Field1D Spectral1D::transform(const Field1D& f, Direction dir) const {
  if (!(f.grid() == grid_)) throw DimensionError("spectral transform: grid mismatch");
  auto buf = fft_.buffer();
  std::copy(f.values().begin(), f.values().end(), buf.begin());
  if (dir == Direction::Forward) {
    fft_.forward();
  } else {
    fft_.backward();
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(grid_.size()));
  Field1D out(grid_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i] * scale;
  return out;
}

Field1D Spectral1D::apply_multiplier(const Field1D& f, std::span<const cplx> multiplier) const {
  if (!(f.grid() == grid_)) throw DimensionError("spectral multiplier: grid mismatch");
  auto buf = fft_.buffer();
  std::copy(f.values().begin(), f.values().end(), buf.begin());
  fft_.forward();
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= multiplier[i];
  fft_.backward();
  const double scale = 1.0 / grid_.size();
  Field1D out(grid_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i] * scale;
  return out;
}

Field1D Spectral1D::derivative(const Field1D& f) const {
  const auto k = odd_wavenumbers(grid_);
  std::vector<cplx> m(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) m[i] = cplx(0.0, k[i]);
  return apply_multiplier(f, m);
}

Field1D Spectral1D::second_derivative(const Field1D& f) const {
  const auto k = grid_.wavenumbers();
  std::vector<cplx> m(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) m[i] = -k[i] * k[i];
  return apply_multiplier(f, m);
}

// ---------------------------------------------------------------- Spectral2D

Spectral2D::Spectral2D(const Grid2D& grid)
    : grid_(grid),
      kx_odd_(odd_wavenumbers(grid.x())),
      ky_odd_(odd_wavenumbers(grid.y())),
      k2_(grid.size()),
      fft_(grid.ny(), grid.nx()),
      spectrum_(grid.size()) {
  const auto kx = grid.x().wavenumbers();
  const auto ky = grid.y().wavenumbers();
  for (int iy = 0; iy < grid.ny(); ++iy) {
    for (int ix = 0; ix < grid.nx(); ++ix) {
      k2_[grid.index(iy, ix)] = kx[ix] * kx[ix] + ky[iy] * ky[iy];
    }
  }
}

void Spectral2D::load(const Field2D& f) const {
  if (!(f.grid() == grid_)) throw DimensionError("spectral operator: grid mismatch");
  auto buf = fft_.buffer();
  std::copy(f.values().begin(), f.values().end(), buf.begin());
}

void Spectral2D::load(const RealField2D& f) const {
  if (!(f.grid() == grid_)) throw DimensionError("spectral operator: grid mismatch");
  auto buf = fft_.buffer();
  std::copy(f.values().begin(), f.values().end(), buf.begin());
}

Field2D Spectral2D::unload(double scale) const {
  auto buf = fft_.buffer();
  Field2D out(grid_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i] * scale;
  return out;
}

Field2D Spectral2D::transform(const Field2D& f, Direction dir) const {
  load(f);
  if (dir == Direction::Forward) {
    fft_.forward();
  } else {
    fft_.backward();
  }
  return unload(1.0 / std::sqrt(static_cast<double>(grid_.size())));
}

Field2D Spectral2D::apply_multiplier(const Field2D& f, std::span<const cplx> multiplier) const {
  load(f);
  fft_.forward();
  auto buf = fft_.buffer();
  for (std::size_t i = 0; i < buf.size(); ++i) buf[i] *= multiplier[i];
  fft_.backward();
  return unload(1.0 / static_cast<double>(grid_.size()));
}

Spectral2D::Derivatives Spectral2D::derivatives(const Field2D& f) const {
  load(f);
  fft_.forward();
  auto buf = fft_.buffer();
  std::copy(buf.begin(), buf.end(), spectrum_.begin());
  const double scale = 1.0 / static_cast<double>(grid_.size());
  const int nx = grid_.nx();
  const int ny = grid_.ny();

  auto with = [&](auto&& mult) {
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const std::size_t i = grid_.index(iy, ix);
        buf[i] = spectrum_[i] * mult(iy, ix, i);
      }
    }
    fft_.backward();
    return unload(scale);
  };
  Field2D ddx = with([&](int, int ix, std::size_t) { return cplx(0.0, kx_odd_[ix]); });
  Field2D ddy = with([&](int iy, int, std::size_t) { return cplx(0.0, ky_odd_[iy]); });
  Field2D lap = with([&](int, int, std::size_t i) { return cplx(-k2_[i], 0.0); });
  return {std::move(ddx), std::move(ddy), std::move(lap)};
}

std::pair<Field2D, Field2D> Spectral2D::gradient(const Field2D& f) const {
  auto d = derivatives(f);
  return {std::move(d.dx), std::move(d.dy)};
}

VectorField2D Spectral2D::gradient(const RealField2D& f) const {
  auto [gx, gy] = gradient(to_complex(f));
  return VectorField2D(real_part(gx), real_part(gy));
}

Field2D Spectral2D::laplacian(const Field2D& f) const {
  std::vector<cplx> m(k2_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = -k2_[i];
  return apply_multiplier(f, m);
}

RealField2D Spectral2D::curl(const VectorField2D& v) const {
  // curl v = d_x v_y - d_y v_x
  auto [dxvx, dyvx] = gradient(to_complex(v.x));
  auto [dxvy, dyvy] = gradient(to_complex(v.y));
  RealField2D out(grid_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dxvy[i].real() - dyvx[i].real();
  return out;
}

RealField2D Spectral2D::div(const VectorField2D& v) const {
  auto [dxvx, dyvx] = gradient(to_complex(v.x));
  auto [dxvy, dyvy] = gradient(to_complex(v.y));
  RealField2D out(grid_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dxvx[i].real() + dyvy[i].real();
  return out;
}

Field2D Spectral2D::divergence(const Field2D& fx, const Field2D& fy) const {
  load(fx);
  fft_.forward();
  auto buf = fft_.buffer();
  std::copy(buf.begin(), buf.end(), spectrum_.begin());
  load(fy);
  fft_.forward();
  const int nx = grid_.nx();
  const int ny = grid_.ny();
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const std::size_t i = grid_.index(iy, ix);
      buf[i] = cplx(0.0, kx_odd_[ix]) * spectrum_[i] + cplx(0.0, ky_odd_[iy]) * buf[i];
    }
  }
  fft_.backward();
  return unload(1.0 / static_cast<double>(grid_.size()));
}

// ---------------------------------------------------------------- free functions

Field1D spectral_transform(const Field1D& f, Direction dir) {
  return Spectral1D(f.grid()).transform(f, dir);
}

Field2D spectral_transform(const Field2D& f, Direction dir) {
  return Spectral2D(f.grid()).transform(f, dir);
}

std::pair<Field2D, Field2D> gradient(const Field2D& f) {
  return Spectral2D(f.grid()).gradient(f);
}

RealField2D curl(const VectorField2D& v) { return Spectral2D(v.grid()).curl(v); }

RealField2D div(const VectorField2D& v) { return Spectral2D(v.grid()).div(v); }

}  // namespace csswg
