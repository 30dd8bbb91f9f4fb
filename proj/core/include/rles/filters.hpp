#pragma once

#include <vector>

#include "rles/field.hpp"

namespace rles {

enum class FilterKind { gaussian, taylor, pade };

// Gaussian filter parameters. `delta` is the scalar width used for periodic
// box work; when `delta_profile` is non-empty (length ny) it takes precedence
// for channel fields.
struct FilterParams {
  double gamma = 6.0;
  double delta = 0.0;
  std::vector<double> delta_profile;

  double width_at(int j) const {
    return delta_profile.empty() ? delta : delta_profile[j];
  }
};

// Transfer function at squared wavenumber k2, with x = delta^2 k2 / (4 gamma):
// gaussian -> exp(-x), taylor -> 1 - x, pade -> 1/(1+x).
double transfer_function(FilterKind kind, double k2, const FilterParams& p);

// Exact discrete Gaussian filter: spectral multiplication in x,z and a
// normalized truncated-kernel convolution in y (kernel cut at 4 standard
// deviations, weights rescaled to unit sum near the walls).
ScalarField apply_gaussian_filter(const ScalarField& f, const FilterParams& p);

// Solves (I + (delta(y)^2/(4 gamma)) (k^2 - d^2/dy^2)) f = rhs per (kx,kz)
// pencil with homogeneous Dirichlet conditions at the walls. Input and output
// are spectral in x,z.
ScalarField helmholtz_inverse(const ScalarField& rhs, const FilterParams& p);

// Pencil-level Helmholtz solve; T is double or complex<double>.
// coef[j] = delta(y_j)^2 / (4 gamma).
template <typename T>
void helmholtz_solve_pencil(const ChannelGrid& g, const std::vector<double>& coef,
                            double k2, const T* rhs, T* out);

}  // namespace rles
