#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "rles/grid.hpp"

namespace rles {

enum class Rep { physical, spectral };

// Scalar field on the channel grid. Holds storage for both representations;
// exactly one is valid at a time (tracked by rep()). Conjugate symmetry of
// real fields is implicit in the r2c layout.
class ScalarField {
 public:
  explicit ScalarField(const ChannelGrid& g, Rep r = Rep::physical);

  const ChannelGrid& grid() const { return *grid_; }
  Rep rep() const { return rep_; }

  // Accessors throw representation_error on mismatch.
  std::span<double> phys();
  std::span<const double> phys() const;
  std::span<std::complex<double>> spec();
  std::span<const std::complex<double>> spec() const;

  double& p(int i, int k, int j) { return ph_[grid_->pidx(i, k, j)]; }
  double p(int i, int k, int j) const { return ph_[grid_->pidx(i, k, j)]; }
  std::complex<double>& s(int m, int k, int j) { return sp_[grid_->sidx(m, k, j)]; }
  std::complex<double> s(int m, int k, int j) const { return sp_[grid_->sidx(m, k, j)]; }

  void to_spectral();
  void to_physical();
  ScalarField as(Rep r) const;  // converting copy

  void set_rep(Rep r) { rep_ = r; }  // storage reinterpretation, no transform
  void zero();

 private:
  const ChannelGrid* grid_;
  Rep rep_;
  std::vector<double> ph_;
  std::vector<std::complex<double>> sp_;
};

// No-slip velocity field: u, w tangential, v wall-normal.
struct VelocityField {
  ScalarField u, v, w;

  explicit VelocityField(const ChannelGrid& g, Rep r = Rep::physical)
      : u(g, r), v(g, r), w(g, r) {}

  const ChannelGrid& grid() const { return u.grid(); }
  ScalarField& comp(int i) { return i == 0 ? u : (i == 1 ? v : w); }
  const ScalarField& comp(int i) const { return i == 0 ? u : (i == 1 ? v : w); }
  void to_spectral() { u.to_spectral(); v.to_spectral(); w.to_spectral(); }
  void to_physical() { u.to_physical(); v.to_physical(); w.to_physical(); }
};

// Six independent components of a symmetric rank-2 tensor, stored in the
// order (1,1),(1,2),(1,3),(2,2),(2,3),(3,3).
struct SymmetricTensorField {
  std::array<ScalarField, 6> c;

  explicit SymmetricTensorField(const ChannelGrid& g, Rep r = Rep::physical)
      : c{ScalarField(g, r), ScalarField(g, r), ScalarField(g, r),
         ScalarField(g, r), ScalarField(g, r), ScalarField(g, r)} {}

  static int index(int i, int j);  // symmetric (i,j) -> storage slot
  ScalarField& comp(int i, int j) { return c[index(i, j)]; }
  const ScalarField& comp(int i, int j) const { return c[index(i, j)]; }
};

// Plane (xz) average of a physical field at every y level.
std::vector<double> plane_average(const ScalarField& f);

// Quadrature-weighted L2 norm over the channel volume (physical rep).
double l2_norm(const ScalarField& f);

}  // namespace rles
