#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace rles {

// N^3 triply periodic box on [0, 2*pi)^3, integer wavenumbers. Real data is
// stored k-fastest: r[(i*n + j)*n + k]; spectral data has the last dimension
// halved: c[(i*n + j)*(n/2 + 1) + k], k in [0, n/2].
class BoxTransform {
 public:
  explicit BoxTransform(int n);
  ~BoxTransform();
  BoxTransform(const BoxTransform&) = delete;
  BoxTransform& operator=(const BoxTransform&) = delete;

  int n() const { return n_; }
  std::size_t real_size() const;
  std::size_t spec_size() const;

  // Forward includes the 1/n^3 normalization; backward leaves the input intact.
  void forward(const std::vector<double>& r,
               std::vector<std::complex<double>>& c) const;
  void backward(const std::vector<std::complex<double>>& c,
                std::vector<double>& r) const;

  // Signed integer wavenumber of index i.
  int wavenumber(int i) const { return i <= n_ / 2 ? i : i - n_; }

 private:
  int n_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct BoxVelocity {
  int n = 0;
  std::vector<double> u, v, w;  // physical, k-fastest
  std::vector<double>& comp(int i) { return i == 0 ? u : i == 1 ? v : w; }
  const std::vector<double>& comp(int i) const {
    return i == 0 ? u : i == 1 ? v : w;
  }
};

// Six independent components, index map (i,j) -> {0:00, 1:01, 2:02, 3:11,
// 4:12, 5:22}, matching SymmetricTensorField::index.
struct BoxTensor {
  int n = 0;
  std::vector<double> c[6];
};

// Multiplies the spectrum by the Gaussian transfer exp(-delta^2 k^2 / (4 gamma)).
void box_gaussian_filter(const BoxTransform& t,
                         std::vector<std::complex<double>>& c, double delta,
                         double gamma);

// Physical-space product of two spectra, evaluated on a 3/2-refined grid so
// that no aliased energy folds back into the retained modes; the result is
// truncated back to the original resolution and returned as a spectrum.
// Both helpers share one padded-grid transform, created on first use.
class PaddedMultiplier {
 public:
  explicit PaddedMultiplier(int n);
  ~PaddedMultiplier();
  void multiply(const BoxTransform& t,
                const std::vector<std::complex<double>>& a,
                const std::vector<std::complex<double>>& b,
                std::vector<std::complex<double>>& ab) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rles
