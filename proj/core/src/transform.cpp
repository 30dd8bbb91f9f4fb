#include "rles/transform.hpp"

#include <fftw3.h>

#include <cstring>
#include <vector>

namespace rles {

struct SpectralTransform::Impl {
  int nx, ny, nz;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  double* pbuf = nullptr;
  fftw_complex* sbuf = nullptr;

  Impl(int nx_, int ny_, int nz_) : nx(nx_), ny(ny_), nz(nz_) {
    const std::size_t np = static_cast<std::size_t>(nx) * nz * ny;
    const std::size_t ns = static_cast<std::size_t>(nx / 2 + 1) * nz * ny;
    pbuf = fftw_alloc_real(np);
    sbuf = fftw_alloc_complex(ns);

    // x is the halved (last-listed) r2c dimension; y is the batch dimension.
    fftw_iodim dims[2];
    dims[0].n = nz;
    dims[0].is = dims[0].os = ny;
    dims[1].n = nx;
    dims[1].is = dims[1].os = nz * ny;
    fftw_iodim hm;
    hm.n = ny;
    hm.is = hm.os = 1;

    fwd = fftw_plan_guru_dft_r2c(2, dims, 1, &hm, pbuf, sbuf,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    bwd = fftw_plan_guru_dft_c2r(2, dims, 1, &hm, sbuf, pbuf,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  }

  ~Impl() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(pbuf);
    fftw_free(sbuf);
  }
};

SpectralTransform::SpectralTransform(int nx, int ny, int nz)
    : impl_(new Impl(nx, ny, nz)) {}

SpectralTransform::~SpectralTransform() { delete impl_; }

std::size_t SpectralTransform::phys_size() const {
  return static_cast<std::size_t>(impl_->nx) * impl_->nz * impl_->ny;
}

std::size_t SpectralTransform::spec_size() const {
  return static_cast<std::size_t>(impl_->nx / 2 + 1) * impl_->nz * impl_->ny;
}

void SpectralTransform::forward(const double* phys,
                                std::complex<double>* spec) const {
  // r2c preserves its input; the const_cast is safe.
  fftw_execute_dft_r2c(impl_->fwd, const_cast<double*>(phys),
                       reinterpret_cast<fftw_complex*>(spec));
  const double scale = 1.0 / (static_cast<double>(impl_->nx) * impl_->nz);
  const std::size_t n = spec_size();
  for (std::size_t i = 0; i < n; ++i) spec[i] *= scale;
}

void SpectralTransform::backward(const std::complex<double>* spec,
                                 double* phys) const {
  // Multidimensional c2r destroys its input: transform a scratch copy.
  std::vector<std::complex<double>> tmp(spec, spec + spec_size());
  fftw_execute_dft_c2r(impl_->bwd, reinterpret_cast<fftw_complex*>(tmp.data()),
                       phys);
}

}  // namespace rles
