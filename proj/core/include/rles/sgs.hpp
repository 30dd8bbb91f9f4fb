#pragma once

#include <array>
#include <string>
#include <utility>

#include "rles/field.hpp"
#include "rles/filters.hpp"

namespace rles {

enum class SgsModel { none, smagorinsky, gradient, rles };

SgsModel sgs_model_from_string(const std::string& name);  // throws config_error
std::string to_string(SgsModel m);

struct SgsConfig {
  SgsModel model = SgsModel::none;
  double cs = 0.1;
  FilterParams filter;

  void validate() const;
};

// S_ij = (du_i/dx_j + du_j/dx_i)/2 and |S| = sqrt(2 S_ij S_ij), physical rep.
std::pair<SymmetricTensorField, ScalarField> strain_rate(const VelocityField& vel);

// tau_ij = (delta(y)^2 / (2 gamma)) sum_l du_i/dx_l du_j/dx_l, physical rep.
SymmetricTensorField tau_gradient(const VelocityField& vel, const FilterParams& p);

// Component-wise inverse-Helmholtz smoothing of the gradient-model stress.
// Returned spectral in x,z.
SymmetricTensorField tau_rles(const VelocityField& vel, const FilterParams& p);

// tau_ij = -(cs delta(y))^2 |S| S_ij, physical rep.
SymmetricTensorField tau_smagorinsky(const VelocityField& vel,
                                     const FilterParams& p, double cs);

// F_i = -sum_j dtau_ij/dx_j, spectral rep, dealiased.
VelocityField sgs_force(const SymmetricTensorField& tau);

namespace detail {
// Model stresses from a precomputed physical gradient tensor (row-major i*3+l);
// lets the solver share gradients between the convective and model terms.
SymmetricTensorField tau_gradient_from(const std::array<ScalarField, 9>& gp,
                                       const FilterParams& p);
SymmetricTensorField tau_smagorinsky_from(const std::array<ScalarField, 9>& gp,
                                          const FilterParams& p, double cs);
}  // namespace detail

}  // namespace rles
