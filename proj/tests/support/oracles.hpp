#pragma once

// Independent reference computations used by the unit and acceptance tests.
// None of these call into the spectral or gauge code under test.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

/// O(n^2) unnormalized DFT with sign -1.
inline std::vector<cplx> direct_dft(const std::vector<cplx>& f) {
  const std::size_t n = f.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx s{};
    for (std::size_t j = 0; j < n; ++j) {
      s += f[j] * std::polar(1.0, -2.0 * kPi * static_cast<double>(j * k) / n);
    }
    out[k] = s;
  }
  return out;
}

/// Isotropic Gaussian density c/(2 pi s^2) exp(-|x - x0|^2 / (2 s^2)).
struct GaussianBump {
  double cx = 0.0;
  double cy = 0.0;
  double sigma = 1.0;
  double weight = 1.0;

  double density(double x, double y) const {
    const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
    return weight / (2.0 * kPi * sigma * sigma) * std::exp(-r2 / (2.0 * sigma * sigma));
  }

  /// Exact beta grad_perp(-log|.|) * density: beta m(r) (-(y-cy), x-cx) / r^2
  /// with m(r) the mass inside radius r.
  std::pair<double, double> potential(double x, double y, double beta) const {
    const double dx = x - cx;
    const double dy = y - cy;
    const double r2 = dx * dx + dy * dy;
    double m_over_r2 = 0.0;
    if (r2 < 1e-12 * sigma * sigma) {
      m_over_r2 = weight / (2.0 * sigma * sigma);
    } else {
      m_over_r2 = weight * -std::expm1(-r2 / (2.0 * sigma * sigma)) / r2;
    }
    return {-beta * m_over_r2 * dy, beta * m_over_r2 * dx};
  }
};

/// A few random bumps well inside [-hx, hx) x [-hy, hy).
inline std::vector<GaussianBump> random_bumps(std::mt19937_64& rng, int count, double hx,
                                              double hy, double min_sigma, double max_sigma) {
  std::uniform_real_distribution<double> ux(-0.25 * hx, 0.25 * hx);
  std::uniform_real_distribution<double> uy(-0.25 * hy, 0.25 * hy);
  std::uniform_real_distribution<double> us(min_sigma, max_sigma);
  std::uniform_real_distribution<double> uw(0.3, 1.0);
  std::vector<GaussianBump> out;
  for (int i = 0; i < count; ++i) out.push_back({ux(rng), uy(rng), us(rng), uw(rng)});
  return out;
}

/// Stationary profile of psi'' = nu psi - g psi^3 + c2 psi^5 on the half line,
/// found by shooting with bisection on psi(0) and an outer regula falsi on nu for
/// unit mass over the whole line.
class CubicQuinticShooter {
 public:
  CubicQuinticShooter(double g, double c2, double x_max, double h = 1e-3)
      : g_(g), c2_(c2), x_max_(x_max), h_(h) {}

  struct Profile {
    double nu = 0.0;
    double amplitude = 0.0;
    std::vector<double> x;
    std::vector<double> psi;

    /// Linear interpolation on the fine ODE grid, even extension.
    double operator()(double xq) const {
      const double a = std::abs(xq);
      const double step = x[1] - x[0];
      const std::size_t i = static_cast<std::size_t>(a / step);
      if (i + 1 >= x.size()) return 0.0;
      const double t = (a - x[i]) / step;
      // cubic Lagrange through i-1..i+2 where available
      if (i >= 1 && i + 2 < x.size()) {
        const double p0 = psi[i - 1], p1 = psi[i], p2 = psi[i + 1], p3 = psi[i + 2];
        return p1 + 0.5 * t * (p2 - p0 + t * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                               t * (3.0 * (p1 - p2) + p3 - p0)));
      }
      return (1.0 - t) * psi[i] + t * psi[i + 1];
    }
  };

  Profile solve_unit_mass() const {
    // Mass grows with nu up to the flat-top limit 3 g^2 / (16 c2); Illinois regula falsi.
    double a = 1e-4;
    double b = c2_ > 0.0 ? 3.0 * g_ * g_ / (16.0 * c2_) * (1.0 - 1e-6) : 10.0;
    double fa = mass(solve(a)) - 1.0;
    double fb = mass(solve(b)) - 1.0;
    int side = 0;
    for (int it = 0; it < 100 && std::abs(b - a) > 1e-14 * b; ++it) {
      const double c = (a * fb - b * fa) / (fb - fa);
      const double fc = mass(solve(c)) - 1.0;
      if (fc == 0.0) return solve(c);
      if ((fc > 0.0) == (fb > 0.0)) {
        b = c;
        fb = fc;
        if (side == -1) fa *= 0.5;
        side = -1;
      } else {
        a = c;
        fa = fc;
        if (side == 1) fb *= 0.5;
        side = 1;
      }
      if (std::abs(fc) < 1e-13) break;
    }
    return solve(std::abs(fa) < std::abs(fb) ? a : b);
  }

  Profile solve(double nu) const {
    // Amplitude bracket: below the upper equilibrium of psi'' = psi (nu - g psi^2 + c2 psi^4).
    double lo = 0.0;
    double hi = c2_ > 0.0
                    ? std::sqrt((g_ + std::sqrt(g_ * g_ - 4.0 * c2_ * nu)) / (2.0 * c2_)) * (1.0 - 1e-12)
                    : std::sqrt(2.0 * nu / g_) * 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      const int fate = shoot(nu, mid, nullptr);
      if (fate > 0) {
        hi = mid;  // crossed zero: too much amplitude
      } else {
        lo = mid;  // turned back up: too little
      }
      if (hi - lo <= 1e-16 * hi) break;
    }
    Profile p;
    p.nu = nu;
    p.amplitude = 0.5 * (lo + hi);
    shoot(nu, p.amplitude, &p);
    return p;
  }

  static double mass(const Profile& p) {
    // Simpson on the half line, doubled.
    double s = 0.0;
    const std::size_t n = p.psi.size() - 1 - ((p.psi.size() - 1) % 2);
    for (std::size_t i = 0; i <= n; ++i) {
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      s += w * p.psi[i] * p.psi[i];
    }
    return 2.0 * s * (p.x[1] - p.x[0]) / 3.0;
  }

 private:
  // +1 when the orbit crosses zero, -1 when it turns back up, 0 if neither by x_max.
  int shoot(double nu, double a, Profile* out) const {
    auto f = [&](double y, double) { const double y2 = y * y;
      return y * (nu - g_ * y2 + c2_ * y2 * y2); };
    double y = a;
    double v = 0.0;
    const int n = static_cast<int>(std::lround(x_max_ / h_));
    int fate = 0;
    if (out) {
      out->x.assign(n + 1, 0.0);
      out->psi.assign(n + 1, 0.0);
      for (int i = 0; i <= n; ++i) out->x[i] = i * h_;
      out->psi[0] = a;
    }
    for (int i = 1; i <= n; ++i) {
      const double k1y = v, k1v = f(y, 0);
      const double k2y = v + 0.5 * h_ * k1v, k2v = f(y + 0.5 * h_ * k1y, 0);
      const double k3y = v + 0.5 * h_ * k2v, k3v = f(y + 0.5 * h_ * k2y, 0);
      const double k4y = v + h_ * k3v, k4v = f(y + h_ * k3y, 0);
      y += h_ / 6.0 * (k1y + 2 * k2y + 2 * k3y + k4y);
      v += h_ / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v);
      if (y < 0.0) {
        fate = 1;
        break;
      }
      if (v > 0.0) {
        fate = -1;
        break;
      }
      if (out) out->psi[i] = y;
    }
    return fate;
  }

  double g_;
  double c2_;
  double x_max_;
  double h_;
};

/// Composite Gauss-Legendre (5 points) quadrature of fn on [a, b] with m panels.
inline double gauss_legendre(const std::function<double(double)>& fn, double a, double b,
                             int m) {
  static const double xs[5] = {0.0, -0.5384693101056831, 0.5384693101056831,
                               -0.9061798459386640, 0.9061798459386640};
  static const double ws[5] = {0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                               0.2369268850561891, 0.2369268850561891};
  const double h = (b - a) / m;
  double s = 0.0;
  for (int p = 0; p < m; ++p) {
    const double c = a + (p + 0.5) * h;
    for (int q = 0; q < 5; ++q) s += ws[q] * fn(c + 0.5 * h * xs[q]);
  }
  return 0.5 * h * s;
}

/// Central 8th-order first derivative along a strided line; valid 4 points from the ends.
inline double fd8(const double* f, std::ptrdiff_t stride, double h) {
  static const double c[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
  double s = 0.0;
  for (int k = 1; k <= 4; ++k) s += c[k - 1] * (f[k * stride] - f[-k * stride]);
  return s / h;
}

}  // namespace oracle
