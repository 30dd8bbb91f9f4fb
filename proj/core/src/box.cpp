#include "rles/box.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>

#include "rles/errors.hpp"

namespace rles {

struct BoxTransform::Impl {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  std::vector<double> rbuf;
  std::vector<std::complex<double>> cbuf;
};

BoxTransform::BoxTransform(int n) : n_(n), impl_(std::make_unique<Impl>()) {
  if (n < 4 || n % 2 != 0)
    throw config_error("periodic box size must be even and >= 4, got " +
                       std::to_string(n));
  impl_->rbuf.resize(real_size());
  impl_->cbuf.resize(spec_size());
  auto* cb = reinterpret_cast<fftw_complex*>(impl_->cbuf.data());
  impl_->fwd = fftw_plan_dft_r2c_3d(n, n, n, impl_->rbuf.data(), cb,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  impl_->bwd = fftw_plan_dft_c2r_3d(n, n, n, cb, impl_->rbuf.data(),
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!impl_->fwd || !impl_->bwd)
    throw internal_error("FFTW failed to plan a 3-D periodic-box transform");
}

BoxTransform::~BoxTransform() {
  if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
  if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
}

std::size_t BoxTransform::real_size() const {
  return static_cast<std::size_t>(n_) * n_ * n_;
}

std::size_t BoxTransform::spec_size() const {
  return static_cast<std::size_t>(n_) * n_ * (n_ / 2 + 1);
}

void BoxTransform::forward(const std::vector<double>& r,
                           std::vector<std::complex<double>>& c) const {
  if (r.size() != real_size())
    throw internal_error("box forward: wrong input size");
  c.resize(spec_size());
  impl_->rbuf = r;
  fftw_execute_dft_r2c(impl_->fwd, impl_->rbuf.data(),
                       reinterpret_cast<fftw_complex*>(c.data()));
  const double scale = 1.0 / static_cast<double>(real_size());
  for (auto& z : c) z *= scale;
}

void BoxTransform::backward(const std::vector<std::complex<double>>& c,
                            std::vector<double>& r) const {
  if (c.size() != spec_size())
    throw internal_error("box backward: wrong input size");
  impl_->cbuf = c;  // c2r destroys its input
  r.resize(real_size());
  fftw_execute_dft_c2r(impl_->bwd,
                       reinterpret_cast<fftw_complex*>(impl_->cbuf.data()),
                       r.data());
}

void box_gaussian_filter(const BoxTransform& t,
                         std::vector<std::complex<double>>& c, double delta,
                         double gamma) {
  const int n = t.n();
  const int nh = n / 2 + 1;
  const double a = delta * delta / (4.0 * gamma);
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    const double ki = t.wavenumber(i);
    for (int j = 0; j < n; ++j) {
      const double kj = t.wavenumber(j);
      for (int k = 0; k < nh; ++k, ++idx) {
        const double k2 = ki * ki + kj * kj + static_cast<double>(k) * k;
        c[idx] *= std::exp(-a * k2);
      }
    }
  }
}

struct PaddedMultiplier::Impl {
  int n;
  int m;  // padded size, 3n/2
  BoxTransform big;
  mutable std::vector<std::complex<double>> pa, pb;
  mutable std::vector<double> ra, rb;
  explicit Impl(int n_) : n(n_), m(3 * n_ / 2), big(3 * n_ / 2) {}
};

PaddedMultiplier::PaddedMultiplier(int n) : impl_(std::make_unique<Impl>(n)) {
  if (n % 2 != 0) throw config_error("padded multiplier needs an even size");
}

PaddedMultiplier::~PaddedMultiplier() = default;

namespace {

// Scatter an n-grid spectrum into the m-grid layout (m > n), zero elsewhere.
void pad_spectrum(int n, int m, const std::vector<std::complex<double>>& a,
                  std::vector<std::complex<double>>& out) {
  const int nh = n / 2 + 1, mh = m / 2 + 1;
  out.assign(static_cast<std::size_t>(m) * m * mh, {0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    const int ii = i <= n / 2 ? i : i + (m - n);
    for (int j = 0; j < n; ++j) {
      const int jj = j <= n / 2 ? j : j + (m - n);
      const std::size_t src = (static_cast<std::size_t>(i) * n + j) * nh;
      const std::size_t dst = (static_cast<std::size_t>(ii) * m + jj) * mh;
      for (int k = 0; k < nh; ++k) out[dst + k] = a[src + k];
    }
  }
}

void truncate_spectrum(int n, int m, const std::vector<std::complex<double>>& a,
                       std::vector<std::complex<double>>& out) {
  const int nh = n / 2 + 1, mh = m / 2 + 1;
  out.resize(static_cast<std::size_t>(n) * n * nh);
  for (int i = 0; i < n; ++i) {
    const int ii = i <= n / 2 ? i : i + (m - n);
    for (int j = 0; j < n; ++j) {
      const int jj = j <= n / 2 ? j : j + (m - n);
      const std::size_t dst = (static_cast<std::size_t>(i) * n + j) * nh;
      const std::size_t src = (static_cast<std::size_t>(ii) * m + jj) * mh;
      for (int k = 0; k < nh; ++k) out[dst + k] = a[src + k];
    }
  }
}

}  // namespace

void PaddedMultiplier::multiply(const BoxTransform& t,
                                const std::vector<std::complex<double>>& a,
                                const std::vector<std::complex<double>>& b,
                                std::vector<std::complex<double>>& ab) const {
  if (t.n() != impl_->n)
    throw internal_error("padded multiplier bound to a different box size");
  pad_spectrum(impl_->n, impl_->m, a, impl_->pa);
  pad_spectrum(impl_->n, impl_->m, b, impl_->pb);
  impl_->big.backward(impl_->pa, impl_->ra);
  impl_->big.backward(impl_->pb, impl_->rb);
  for (std::size_t p = 0; p < impl_->ra.size(); ++p)
    impl_->ra[p] *= impl_->rb[p];
  impl_->big.forward(impl_->ra, impl_->pa);
  truncate_spectrum(impl_->n, impl_->m, impl_->pa, ab);
}

}  // namespace rles
