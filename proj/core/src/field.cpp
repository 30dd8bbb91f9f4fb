#include "rles/field.hpp"

#include <cmath>

#include "rles/errors.hpp"
#include "rles/transform.hpp"

namespace rles {

ScalarField::ScalarField(const ChannelGrid& g, Rep r)
    : grid_(&g), rep_(r), ph_(g.phys_size(), 0.0), sp_(g.spec_size()) {}

std::span<double> ScalarField::phys() {
  if (rep_ != Rep::physical)
    throw representation_error("field is spectral, physical data requested");
  return ph_;
}

std::span<const double> ScalarField::phys() const {
  if (rep_ != Rep::physical)
    throw representation_error("field is spectral, physical data requested");
  return ph_;
}

std::span<std::complex<double>> ScalarField::spec() {
  if (rep_ != Rep::spectral)
    throw representation_error("field is physical, spectral data requested");
  return sp_;
}

std::span<const std::complex<double>> ScalarField::spec() const {
  if (rep_ != Rep::spectral)
    throw representation_error("field is physical, spectral data requested");
  return sp_;
}

void ScalarField::to_spectral() {
  if (rep_ == Rep::spectral) return;
  grid_->transform().forward(ph_.data(), sp_.data());
  rep_ = Rep::spectral;
}

void ScalarField::to_physical() {
  if (rep_ == Rep::physical) return;
  grid_->transform().backward(sp_.data(), ph_.data());
  rep_ = Rep::physical;
}

ScalarField ScalarField::as(Rep r) const {
  ScalarField out = *this;
  if (r == Rep::spectral)
    out.to_spectral();
  else
    out.to_physical();
  return out;
}

void ScalarField::zero() {
  std::fill(ph_.begin(), ph_.end(), 0.0);
  std::fill(sp_.begin(), sp_.end(), std::complex<double>(0.0, 0.0));
}

int SymmetricTensorField::index(int i, int j) {
  static constexpr int map[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return map[i][j];
}

std::vector<double> plane_average(const ScalarField& f) {
  const ChannelGrid& g = f.grid();
  auto p = f.phys();
  std::vector<double> mean(g.ny(), 0.0);
  for (int i = 0; i < g.nx(); ++i)
    for (int k = 0; k < g.nz(); ++k) {
      const double* col = p.data() + g.pidx(i, k, 0);
      for (int j = 0; j < g.ny(); ++j) mean[j] += col[j];
    }
  const double inv = 1.0 / (static_cast<double>(g.nx()) * g.nz());
  for (double& m : mean) m *= inv;
  return mean;
}

double l2_norm(const ScalarField& f) {
  const ChannelGrid& g = f.grid();
  auto p = f.phys();
  const auto& w = g.weights();
  double acc = 0.0;
  for (int i = 0; i < g.nx(); ++i)
    for (int k = 0; k < g.nz(); ++k) {
      const double* col = p.data() + g.pidx(i, k, 0);
      for (int j = 0; j < g.ny(); ++j) acc += w[j] * col[j] * col[j];
    }
  return std::sqrt(acc / (static_cast<double>(g.nx()) * g.nz()));
}

}  // namespace rles
