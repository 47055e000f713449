#pragma once

#include <complex>
#include <memory>
#include <span>

namespace csswg {

/// In-place complex FFT on an owned, SIMD-aligned work buffer.
///
/// Transforms are unnormalized (forward sign -1, backward sign +1); callers
/// apply the scaling they need. Plans are created with FFTW_ESTIMATE so that
/// results are bit-reproducible from run to run. An instance is not safe for
/// concurrent use; give each thread its own.
class FftPlan {
 public:
  /// rank-1 transform of length n0, or rank-2 transform of shape [n0][n1].
  explicit FftPlan(int n0, int n1 = 0);
  ~FftPlan();
  FftPlan(FftPlan&&) noexcept;
  FftPlan& operator=(FftPlan&&) noexcept;
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::span<std::complex<double>> buffer() noexcept;
  std::span<const std::complex<double>> buffer() const noexcept;
  std::size_t size() const noexcept;

  void forward() noexcept;
  void backward() noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Smallest even integer >= n whose only prime factors are 2, 3, 5 and 7.
int next_fast_size(int n);

}  // namespace csswg
