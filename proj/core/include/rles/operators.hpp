#pragma once

#include <array>

#include "rles/field.hpp"

namespace rles {

// Spectral derivatives in the periodic directions (input must be spectral;
// Nyquist-mode derivative is set to zero).
ScalarField deriv_x(const ScalarField& f);
ScalarField deriv_z(const ScalarField& f);

// Wall-normal derivative: wide central differences (f[j+1]-f[j-1])/(y[j+1]-y[j-1])
// in the interior -- skew-adjoint against the trapezoid weights -- and
// one-sided second-order stencils at the walls. Works in either representation.
ScalarField deriv_y(const ScalarField& f);

// Pencil-level d/dy on a y-contiguous span; T is double or complex<double>.
template <typename T>
void deriv_y_pencil(const ChannelGrid& g, const T* f, T* out) {
  const int ny = g.ny();
  const auto& y = g.y();
  const double* lo = g.dwall_lo();
  const double* hi = g.dwall_hi();
  out[0] = lo[0] * f[0] + lo[1] * f[1] + lo[2] * f[2];
  for (int j = 1; j < ny - 1; ++j)
    out[j] = (f[j + 1] - f[j - 1]) / (y[j + 1] - y[j - 1]);
  out[ny - 1] = hi[0] * f[ny - 1] + hi[1] * f[ny - 2] + hi[2] * f[ny - 3];
}

// All nine components du_i/dx_l, stored row-major (i*3 + l), spectral rep.
std::array<ScalarField, 9> gradient_tensor(const VelocityField& vel);

// du/dx + dv/dy + dw/dz, spectral rep.
ScalarField divergence(const VelocityField& vel);

// 2/3-rule truncation; input must be spectral.
ScalarField dealias(const ScalarField& f);
void dealias_inplace(ScalarField& f);

}  // namespace rles
