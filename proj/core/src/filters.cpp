#include "rles/filters.hpp"

#include <cmath>
#include <complex>

#include "rles/errors.hpp"

namespace rles {

double transfer_function(FilterKind kind, double k2, const FilterParams& p) {
  const double x = p.delta * p.delta * k2 / (4.0 * p.gamma);
  switch (kind) {
    case FilterKind::gaussian: return std::exp(-x);
    case FilterKind::taylor: return 1.0 - x;
    case FilterKind::pade: return 1.0 / (1.0 + x);
  }
  return 0.0;
}

ScalarField apply_gaussian_filter(const ScalarField& f, const FilterParams& p) {
  const ChannelGrid& g = f.grid();
  const Rep orig = f.rep();
  ScalarField out = f.as(Rep::spectral);

  // Periodic directions: exact transfer-function multiplication, with the
  // local filter width at each y level.
  {
    auto s = out.spec();
    for (int m = 0; m < g.nxs(); ++m)
      for (int k = 0; k < g.nz(); ++k) {
        const double k2 = g.kx()[m] * g.kx()[m] + g.kz()[k] * g.kz()[k];
        const std::size_t base = g.sidx(m, k, 0);
        for (int j = 0; j < g.ny(); ++j) {
          const double d = p.width_at(j);
          s[base + j] *= std::exp(-d * d * k2 / (4.0 * p.gamma));
        }
      }
  }

  // Wall-normal direction: truncated discrete Gaussian kernel, renormalized
  // so weights sum to one (no-flux extension at the walls).
  out.to_physical();
  const int ny = g.ny();
  const auto& y = g.y();
  const auto& wt = g.weights();
  std::vector<double> kernel(static_cast<std::size_t>(ny) * ny, 0.0);
  for (int j = 0; j < ny; ++j) {
    const double d = p.width_at(j);
    const double sigma = d / std::sqrt(2.0 * p.gamma);
    double* row = kernel.data() + static_cast<std::size_t>(j) * ny;
    if (sigma < 0.25 * std::min(j > 0 ? y[j] - y[j - 1] : 1.0,
                                j < ny - 1 ? y[j + 1] - y[j] : 1.0)) {
      row[j] = 1.0;  // kernel narrower than the mesh: identity
      continue;
    }
    double sum = 0.0;
    for (int i = 0; i < ny; ++i) {
      const double r = y[j] - y[i];
      if (std::abs(r) > 4.0 * sigma) continue;
      const double wv = std::exp(-r * r / (2.0 * sigma * sigma)) * wt[i];
      row[i] = wv;
      sum += wv;
    }
    for (int i = 0; i < ny; ++i) row[i] /= sum;
  }

  auto ph = out.phys();
  std::vector<double> tmp(ny);
  const std::size_t npen = static_cast<std::size_t>(g.nx()) * g.nz();
  for (std::size_t pen = 0; pen < npen; ++pen) {
    double* col = ph.data() + pen * ny;
    for (int j = 0; j < ny; ++j) {
      const double* row = kernel.data() + static_cast<std::size_t>(j) * ny;
      double acc = 0.0;
      for (int i = 0; i < ny; ++i) acc += row[i] * col[i];
      tmp[j] = acc;
    }
    for (int j = 0; j < ny; ++j) col[j] = tmp[j];
  }

  if (orig == Rep::spectral) out.to_spectral();
  return out;
}

template <typename T>
void helmholtz_solve_pencil(const ChannelGrid& g, const std::vector<double>& coef,
                            double k2, const T* rhs, T* out) {
  const int ny = g.ny();
  // Thomas algorithm; the matrix is diagonally dominant for coef >= 0.
  std::vector<double> a(ny), b(ny), c(ny);
  std::vector<T> d(ny);
  b[0] = 1.0; c[0] = 0.0; d[0] = T(0);                 // Dirichlet walls
  b[ny - 1] = 1.0; a[ny - 1] = 0.0; d[ny - 1] = T(0);
  for (int j = 1; j < ny - 1; ++j) {
    a[j] = -coef[j] * g.d2_lo()[j];
    b[j] = 1.0 + coef[j] * (k2 - g.d2_di()[j]);
    c[j] = -coef[j] * g.d2_up()[j];
    d[j] = rhs[j];
  }
  for (int j = 1; j < ny; ++j) {
    const double m = a[j] / b[j - 1];
    b[j] -= m * c[j - 1];
    d[j] -= m * d[j - 1];
  }
  if (b[ny - 1] == 0.0) throw internal_error("singular Helmholtz pencil");
  out[ny - 1] = d[ny - 1] / b[ny - 1];
  for (int j = ny - 2; j >= 0; --j) out[j] = (d[j] - c[j] * out[j + 1]) / b[j];
}

template void helmholtz_solve_pencil<double>(const ChannelGrid&,
                                             const std::vector<double>&, double,
                                             const double*, double*);
template void helmholtz_solve_pencil<std::complex<double>>(
    const ChannelGrid&, const std::vector<double>&, double,
    const std::complex<double>*, std::complex<double>*);

ScalarField helmholtz_inverse(const ScalarField& rhs, const FilterParams& p) {
  if (rhs.rep() != Rep::spectral)
    throw representation_error("helmholtz_inverse requires a spectral rhs");
  const ChannelGrid& g = rhs.grid();
  std::vector<double> coef(g.ny());
  for (int j = 0; j < g.ny(); ++j) {
    const double d = p.width_at(j);
    coef[j] = d * d / (4.0 * p.gamma);
  }
  ScalarField out(g, Rep::spectral);
  auto in = rhs.spec();
  auto o = out.spec();
  for (int m = 0; m < g.nxs(); ++m)
    for (int k = 0; k < g.nz(); ++k) {
      const double k2 = g.kx()[m] * g.kx()[m] + g.kz()[k] * g.kz()[k];
      const std::size_t base = g.sidx(m, k, 0);
      helmholtz_solve_pencil(g, coef, k2, in.data() + base, o.data() + base);
    }
  return out;
}

}  // namespace rles
