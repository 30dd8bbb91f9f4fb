#pragma once

#include <string>
#include <vector>

#include "rles/solver.hpp"

namespace rles {

// Running plane-averaged sums with compensated (Kahan) accumulation;
// channel runs take ~10^5 samples.
class FlowStatistics {
 public:
  explicit FlowStatistics(const ChannelGrid& g);

  // Adds plane averages of u, v, w, uu, vv, ww, uv (and optionally the model
  // stress component tau12) from a solver snapshot.
  void accumulate(const SolverState& state,
                  const std::vector<double>* tau12 = nullptr);

  long n_samples() const { return n_; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  const ChannelGrid& grid() const { return *grid_; }

  // Sample-mean profiles (length ny).
  std::vector<double> mean(const std::string& key) const;  // u v w uu vv ww uv tau12 dpdx->scalar

  double mean_dpdx() const;

 private:
  struct Acc {
    std::vector<double> sum, comp;
    void add(const std::vector<double>& x);
  };
  const ChannelGrid* grid_;
  long n_ = 0;
  double t0_ = 0.0, t1_ = 0.0;
  Acc u_, v_, w_, uu_, vv_, ww_, uv_, tau12_;
  double dpdx_sum_ = 0.0, dpdx_comp_ = 0.0;
};

struct ProfilesReport {
  // Full-channel symmetrized mean profiles (length ny).
  std::vector<double> y, u_mean, v_mean, uv_fluct, uu_fluct, vv_fluct, ww_fluct,
      tau12_model;
  // Lower-half wall-unit profiles (one row per y <= 0).
  std::vector<double> y_half, y_plus, u_plus, uv_plus, urms_plus, vrms_plus,
      wrms_plus, total_shear;
  double u_tau = 0.0, re_tau = 0.0;
  double u_tau_lower = 0.0, u_tau_upper = 0.0;
  double nu = 0.0;
  double shear_residual = 0.0;  // max deviation from the wall-to-wall line
  bool wall_shear_warning = false;
};

// Half-channel symmetrization (parity-aware), friction velocity, wall units,
// shear-stress balance. Throws config_error when no samples were taken.
ProfilesReport finalize(const FlowStatistics& stats, double nu);

struct WallShear {
  double u_tau = 0.0, re_tau = 0.0;
  double u_tau_lower = 0.0, u_tau_upper = 0.0;
  bool warning = false;  // wall shears of opposite sign
};

// One-sided second-order wall slopes of a mean profile, both walls averaged.
WallShear compute_u_tau(const std::vector<double>& u_mean,
                        const ChannelGrid& g, double nu);

struct ShearBalance {
  std::vector<double> y, viscous, resolved, model, total, line;
  double residual = 0.0;  // max |total - line| / wall shear
};

// total(y) = nu d<u>/dy - <u'v'> - <tau12>; the model stress carries
// momentum like the resolved stress. The line runs through the two
// wall values. Diagnostic only, never throws on unsteady input.
ShearBalance shear_stress_balance(const ProfilesReport& rep);

// Writes the profile CSV: y,y_plus,U_plus,uv_plus,urms_plus,vrms_plus,
// wrms_plus,total_shear (lower half-channel).
void write_profiles_csv(const ProfilesReport& rep, const std::string& path);

void write_shear_balance_csv(const ShearBalance& sb, const std::string& path);

}  // namespace rles
