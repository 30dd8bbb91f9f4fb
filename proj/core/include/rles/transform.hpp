#pragma once

#include <complex>
#include <cstddef>

namespace rles {

// Batched 2D real<->complex Fourier transforms over the periodic (x,z)
// directions of a channel field stored y-fastest: phys[(i*nz + k)*ny + j],
// spec[(m*nz + k)*ny + j] with m in [0, nx/2]. Forward transforms are
// normalized by 1/(nx*nz) so spectral entries are mode amplitudes.
//
// Plans use FFTW_ESTIMATE: deterministic plan choice, bitwise-reproducible
// results across runs. Execution is thread-safe (new-array interface).
class SpectralTransform {
 public:
  SpectralTransform(int nx, int ny, int nz);
  ~SpectralTransform();
  SpectralTransform(const SpectralTransform&) = delete;
  SpectralTransform& operator=(const SpectralTransform&) = delete;

  void forward(const double* phys, std::complex<double>* spec) const;
  void backward(const std::complex<double>* spec, double* phys) const;

  std::size_t phys_size() const;
  std::size_t spec_size() const;

 private:
  struct Impl;
  Impl* impl_;
};

}  // namespace rles
