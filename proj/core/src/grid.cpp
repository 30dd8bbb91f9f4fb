#include "rles/grid.hpp"

#include <cmath>
#include <string>

#include "rles/errors.hpp"
#include "rles/transform.hpp"

namespace rles {

namespace {
constexpr double kDeltaFloor = 1e-8;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

void GridConfig::validate() const {
  if (nx < 8 || nx % 2 != 0)
    throw config_error("grid.nx must be even and >= 8, got " + std::to_string(nx));
  if (nz < 8 || nz % 2 != 0)
    throw config_error("grid.nz must be even and >= 8, got " + std::to_string(nz));
  if (ny < 9 || ny % 2 == 0)
    throw config_error("grid.ny must be odd and >= 9, got " + std::to_string(ny));
  if (!(lx > 0.0)) throw config_error("grid.lx must be > 0");
  if (!(lz > 0.0)) throw config_error("grid.lz must be > 0");
  if (!(stretch_beta > 0.0)) throw config_error("grid.stretch_beta must be > 0");
}

ChannelGrid::ChannelGrid(const GridConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const int ny = cfg_.ny;
  const int mid = (ny - 1) / 2;

  // tanh stretch map, mirrored for exact antisymmetry about y = 0.
  y_.assign(ny, 0.0);
  const double tb = std::tanh(cfg_.stretch_beta);
  for (int j = 0; j < mid; ++j) {
    const double s = -1.0 + 2.0 * j / (ny - 1);
    y_[j] = std::tanh(cfg_.stretch_beta * s) / tb;
    y_[ny - 1 - j] = -y_[j];
  }
  y_[mid] = 0.0;

  dy_.resize(ny - 1);
  for (int j = 0; j + 1 < ny; ++j) dy_[j] = y_[j + 1] - y_[j];

  kx_.resize(cfg_.nx / 2 + 1);
  for (int m = 0; m <= cfg_.nx / 2; ++m) kx_[m] = 2.0 * kPi * m / cfg_.lx;
  kz_.resize(cfg_.nz);
  for (int n = 0; n < cfg_.nz; ++n) {
    const int nn = (n <= cfg_.nz / 2) ? n : n - cfg_.nz;
    kz_[n] = 2.0 * kPi * nn / cfg_.lz;
  }

  delta_ = filter_width_profile(cfg_, y_, dy_);

  w_trap_.assign(ny, 0.0);
  w_trap_[0] = dy_[0] / 2.0;
  w_trap_[ny - 1] = dy_[ny - 2] / 2.0;
  for (int j = 1; j < ny - 1; ++j) w_trap_[j] = (dy_[j - 1] + dy_[j]) / 2.0;

  // Nonuniform composite Simpson over consecutive interval pairs (ny odd).
  w_quad_.assign(ny, 0.0);
  for (int j = 0; j + 2 < ny; j += 2) {
    const double h0 = dy_[j], h1 = dy_[j + 1];
    const double f = (h0 + h1) / 6.0;
    w_quad_[j] += f * (2.0 - h1 / h0);
    w_quad_[j + 1] += f * (h0 + h1) * (h0 + h1) / (h0 * h1);
    w_quad_[j + 2] += f * (2.0 - h0 / h1);
  }

  d2_lo_.assign(ny, 0.0);
  d2_di_.assign(ny, 0.0);
  d2_up_.assign(ny, 0.0);
  for (int j = 1; j < ny - 1; ++j) {
    const double hm = dy_[j - 1], hp = dy_[j];
    const double den = hm * hp * (hm + hp);
    d2_lo_[j] = 2.0 * hp / den;
    d2_di_[j] = -2.0 * (hm + hp) / den;
    d2_up_[j] = 2.0 * hm / den;
  }

  // One-sided 3-point first derivative, exact for quadratics.
  {
    const double h0 = dy_[0], h1 = dy_[1];
    dwall_lo_[0] = -(2.0 * h0 + h1) / (h0 * (h0 + h1));
    dwall_lo_[1] = (h0 + h1) / (h0 * h1);
    dwall_lo_[2] = -h0 / (h1 * (h0 + h1));
    const double g0 = dy_[ny - 2], g1 = dy_[ny - 3];
    dwall_hi_[0] = (2.0 * g0 + g1) / (g0 * (g0 + g1));   // coefficient of f[ny-1]
    dwall_hi_[1] = -(g0 + g1) / (g0 * g1);               // coefficient of f[ny-2]
    dwall_hi_[2] = g0 / (g1 * (g0 + g1));                // coefficient of f[ny-3]
  }

  transform_ = std::make_unique<SpectralTransform>(cfg_.nx, cfg_.ny, cfg_.nz);
}

ChannelGrid::~ChannelGrid() = default;

bool ChannelGrid::mode_kept(int m, int n) const {
  const int nabs = (n <= cfg_.nz / 2) ? n : cfg_.nz - n;
  return m <= x_cut() && nabs <= z_cut();
}

std::size_t ChannelGrid::phys_size() const {
  return static_cast<std::size_t>(cfg_.nx) * cfg_.nz * cfg_.ny;
}

std::size_t ChannelGrid::spec_size() const {
  return static_cast<std::size_t>(cfg_.nx / 2 + 1) * cfg_.nz * cfg_.ny;
}

std::unique_ptr<ChannelGrid> build_grid(const GridConfig& cfg) {
  return std::make_unique<ChannelGrid>(cfg);
}

std::vector<double> filter_width_profile(const GridConfig& cfg,
                                         const std::vector<double>& y,
                                         const std::vector<double>& dy) {
  const int ny = cfg.ny;
  const int mid = (ny - 1) / 2;
  const double dx = cfg.lx / cfg.nx;
  const double dz = cfg.lz / cfg.nz;
  const double hc = (dy[mid - 1] + dy[mid]) / 2.0;  // centerline cell width
  std::vector<double> delta(ny);
  for (int j = 0; j < ny; ++j) {
    const bool wall = (j == 0 || j == ny - 1);
    const double dyi = wall ? 0.0 : 2.0 * hc * std::cos(kPi * y[j] / 2.0);
    delta[j] = std::max(std::cbrt(dx * dz * dyi), kDeltaFloor);
  }
  return delta;
}

}  // namespace rles
