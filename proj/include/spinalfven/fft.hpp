#pragma once

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <mutex>
#include <new>
#include <span>
#include <utility>

namespace spinalfven {

namespace detail {
// FFTW's planner is not re-entrant; execution of distinct plans is.
inline std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace detail

/// In-place complex FFT of fixed length over an owned, SIMD-aligned buffer.
/// Both directions are unnormalized. Plans are created with FFTW_ESTIMATE so
/// results do not depend on timing measurements.
class FftWorkspace {
 public:
  explicit FftWorkspace(std::size_t n) : n_(n) {
    data_ = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (data_ == nullptr) throw std::bad_alloc();
    std::lock_guard lock(detail::fftw_planner_mutex());
    const int len = static_cast<int>(n);
    forward_ = fftw_plan_dft_1d(len, data_, data_, FFTW_FORWARD, FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_1d(len, data_, data_, FFTW_BACKWARD, FFTW_ESTIMATE);
  }

  FftWorkspace(const FftWorkspace& other) : FftWorkspace(other.n_) {
    std::copy(other.data().begin(), other.data().end(), data().begin());
  }
  FftWorkspace& operator=(const FftWorkspace& other) {
    if (this != &other) {
      FftWorkspace tmp(other);
      swap(tmp);
    }
    return *this;
  }
  FftWorkspace(FftWorkspace&& other) noexcept { swap(other); }
  FftWorkspace& operator=(FftWorkspace&& other) noexcept {
    swap(other);
    return *this;
  }

  ~FftWorkspace() {
    if (data_ == nullptr) return;
    {
      std::lock_guard lock(detail::fftw_planner_mutex());
      fftw_destroy_plan(forward_);
      fftw_destroy_plan(backward_);
    }
    fftw_free(data_);
  }

  void swap(FftWorkspace& other) noexcept {
    std::swap(n_, other.n_);
    std::swap(data_, other.data_);
    std::swap(forward_, other.forward_);
    std::swap(backward_, other.backward_);
  }

  std::size_t size() const noexcept { return n_; }

  std::span<std::complex<double>> data() noexcept {
    return {reinterpret_cast<std::complex<double>*>(data_), n_};
  }
  std::span<const std::complex<double>> data() const noexcept {
    return {reinterpret_cast<const std::complex<double>*>(data_), n_};
  }

  void forward() noexcept { fftw_execute(forward_); }
  void backward() noexcept { fftw_execute(backward_); }

 private:
  std::size_t n_ = 0;
  fftw_complex* data_ = nullptr;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

}  // namespace spinalfven
