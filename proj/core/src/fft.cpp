#include "csswg/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "csswg/error.hpp"

namespace csswg {

namespace {

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

struct FftPlan::Impl {
  std::size_t n = 0;
  fftw_complex* data = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
    if (data) fftw_free(data);
  }
};

FftPlan::FftPlan(int n0, int n1) : impl_(std::make_unique<Impl>()) {
  if (n0 <= 0 || n1 < 0) throw ConfigurationError("invalid FFT shape");
  impl_->n = static_cast<std::size_t>(n0) * static_cast<std::size_t>(n1 > 0 ? n1 : 1);
  std::lock_guard lock(planner_mutex());
  impl_->data = fftw_alloc_complex(impl_->n);
  if (!impl_->data) throw Error("FFT buffer allocation failed");
  if (n1 > 0) {
    impl_->fwd = fftw_plan_dft_2d(n0, n1, impl_->data, impl_->data, FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_2d(n0, n1, impl_->data, impl_->data, FFTW_BACKWARD, FFTW_ESTIMATE);
  } else {
    impl_->fwd = fftw_plan_dft_1d(n0, impl_->data, impl_->data, FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_1d(n0, impl_->data, impl_->data, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  if (!impl_->fwd || !impl_->bwd) throw Error("FFTW planning failed");
}

FftPlan::~FftPlan() = default;
FftPlan::FftPlan(FftPlan&&) noexcept = default;
FftPlan& FftPlan::operator=(FftPlan&&) noexcept = default;

std::span<std::complex<double>> FftPlan::buffer() noexcept {
  return {reinterpret_cast<std::complex<double>*>(impl_->data), impl_->n};
}

std::span<const std::complex<double>> FftPlan::buffer() const noexcept {
  return {reinterpret_cast<const std::complex<double>*>(impl_->data), impl_->n};
}

std::size_t FftPlan::size() const noexcept { return impl_->n; }

void FftPlan::forward() noexcept { fftw_execute(impl_->fwd); }
void FftPlan::backward() noexcept { fftw_execute(impl_->bwd); }

int next_fast_size(int n) {
  for (int m = std::max(n, 2);; ++m) {
    if (m % 2) continue;
    int r = m;
    for (int p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

}  // namespace csswg
