#pragma once

#include <memory>
#include <vector>

namespace rles {

class SpectralTransform;

// Channel discretization parameters. Walls at y = +-1 (Ly = 2 fixed),
// x and z periodic with uniform collocation, y stretched toward the walls.
struct GridConfig {
  double lx = 0.0;           // streamwise period, half-width units
  double lz = 0.0;           // spanwise period
  int nx = 0;                // streamwise points (even, >= 8)
  int ny = 0;                // wall-normal points (odd, >= 9)
  int nz = 0;                // spanwise points (even, >= 8)
  double stretch_beta = 2.2; // tanh wall-clustering parameter, > 0

  void validate() const;  // throws config_error naming the offending field
};

// Immutable after construction; safe for shared concurrent reads.
class ChannelGrid {
 public:
  explicit ChannelGrid(const GridConfig& cfg);
  ~ChannelGrid();
  ChannelGrid(const ChannelGrid&) = delete;
  ChannelGrid& operator=(const ChannelGrid&) = delete;

  const GridConfig& config() const { return cfg_; }
  int nx() const { return cfg_.nx; }
  int ny() const { return cfg_.ny; }
  int nz() const { return cfg_.nz; }
  int nxs() const { return cfg_.nx / 2 + 1; }  // stored kx modes (r2c)

  // Wall-normal coordinates, strictly increasing, antisymmetric, y[0] = -1.
  const std::vector<double>& y() const { return y_; }
  const std::vector<double>& dy() const { return dy_; }          // ny-1 cell widths
  const std::vector<double>& kx() const { return kx_; }          // nx/2+1 wavenumbers
  const std::vector<double>& kz() const { return kz_; }          // nz signed wavenumbers
  const std::vector<double>& delta() const { return delta_; }    // filter width profile

  // Trapezoid weights (pair with the wide central d/dy for skew-adjointness).
  const std::vector<double>& weights() const { return w_trap_; }
  // Composite-Simpson weights on the stretched nodes; exact for quadratics,
  // used for bulk-velocity and volume integrals.
  const std::vector<double>& quad_weights() const { return w_quad_; }

  double dx() const { return cfg_.lx / cfg_.nx; }
  double dz() const { return cfg_.lz / cfg_.nz; }

  // 2/3-rule dealias cutoffs: modes with |m| > x_cut or |n| > z_cut are dropped.
  int x_cut() const { return cfg_.nx / 3; }
  int z_cut() const { return cfg_.nz / 3; }
  bool mode_kept(int m, int n) const;

  // Nonuniform 3-point second-derivative rows, interior j = 1..ny-2.
  const std::vector<double>& d2_lo() const { return d2_lo_; }
  const std::vector<double>& d2_di() const { return d2_di_; }
  const std::vector<double>& d2_up() const { return d2_up_; }

  // One-sided second-order first-derivative stencils at the walls:
  // f'(y0) ~ b0*f0 + b1*f1 + b2*f2 and mirrored at the top wall.
  const double* dwall_lo() const { return dwall_lo_; }
  const double* dwall_hi() const { return dwall_hi_; }

  const SpectralTransform& transform() const { return *transform_; }

  std::size_t phys_size() const;
  std::size_t spec_size() const;
  std::size_t pidx(int i, int k, int j) const {
    return (static_cast<std::size_t>(i) * cfg_.nz + k) * cfg_.ny + j;
  }
  std::size_t sidx(int m, int k, int j) const {
    return (static_cast<std::size_t>(m) * cfg_.nz + k) * cfg_.ny + j;
  }

 private:
  GridConfig cfg_;
  std::vector<double> y_, dy_, kx_, kz_, delta_, w_trap_, w_quad_;
  std::vector<double> d2_lo_, d2_di_, d2_up_;
  double dwall_lo_[3], dwall_hi_[3];
  std::unique_ptr<SpectralTransform> transform_;
};

// Builds the channel grid; y_j = tanh(beta s_j)/tanh(beta), s_j uniform on [-1,1].
std::unique_ptr<ChannelGrid> build_grid(const GridConfig& cfg);

// delta(y_j) = cbrt(dx * dz * dy_interp(y_j)) with dy_interp = 2 h_c cos(pi y/2),
// zero at the walls (floored to 1e-8 there) and twice the centerline cell width
// at y = 0.
std::vector<double> filter_width_profile(const GridConfig& cfg,
                                         const std::vector<double>& y,
                                         const std::vector<double>& dy);

}  // namespace rles
