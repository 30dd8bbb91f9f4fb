#pragma once

#include <string>

#include "rles/box.hpp"
#include "rles/filters.hpp"
#include "rles/sgs.hpp"

namespace rles {

// Random solenoidal velocity field on an N^3 periodic box with shell spectrum
// E(k) ~ k^slope (low-k plateau below k = 2), modes beyond 2/3 Nyquist
// removed, unit rms, deterministic per seed. N must be a power of two >= 16.
BoxVelocity synthesize_field(int n, double slope, std::uint64_t seed);

// tau_ij = G(u_i u_j) - G(u_i) G(u_j) with the exact spectral Gaussian
// transfer; products evaluated on a 3/2-padded grid.
BoxTensor exact_subfilter_stress(const BoxVelocity& vel,
                                 const FilterParams& params);

// Model predictions evaluated from the Gaussian-filtered field.
BoxTensor box_gradient_stress(const BoxVelocity& vel,
                              const FilterParams& params);
// Gradient stress followed by the spectral inverse-Helmholtz smoothing
// 1 / (1 + delta^2 k^2 / (4 gamma)).
BoxTensor box_rles_stress(const BoxVelocity& vel, const FilterParams& params);
BoxTensor box_smagorinsky_stress(const BoxVelocity& vel,
                                 const FilterParams& params, double cs);

BoxTensor model_stress(SgsModel model, const BoxVelocity& vel,
                       const FilterParams& params, double cs = 0.1);

struct CorrelationReport {
  double component[6] = {0, 0, 0, 0, 0, 0};  // 00 01 02 11 12 22
  double pooled = 0.0;
};

// Pearson correlations over all grid points, per-component means removed;
// pooled pools the centered component samples. Throws stat_error when either
// input has zero variance in some component.
CorrelationReport correlation(const BoxTensor& exact, const BoxTensor& model);

// Relative L2 distance ||a - b|| / ||b|| over all six components.
double relative_tensor_error(const BoxTensor& a, const BoxTensor& b);

}  // namespace rles
