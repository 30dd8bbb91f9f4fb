#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "rles/field.hpp"
#include "rles/sgs.hpp"

namespace rles {

struct RunConfig {
  double dt = 0.0;
  std::int64_t n_steps = 0;
  double u_m = 1.0;              // target bulk velocity
  double re = 1.0;               // nu = 1/re
  SgsConfig sgs;
  GridConfig grid;
  double stabilizer_alpha = 0.02;  // in [0, 0.05]
  std::uint64_t seed = 1;
  double perturbation = 0.1;       // initial fluctuation rms / u_m

  std::int64_t transient_steps = 0;   // steps before statistics sampling
  std::int64_t checkpoint_every = 0;  // 0: final checkpoint only

  // Test hooks, not exposed as config keys: the inviscid conservation check
  // runs without dealiasing and without the flux controller.
  bool enable_dealias = true;
  bool enable_controller = true;

  double nu() const { return 1.0 / re; }
  void validate() const;
};

// Velocity is held in physical space between steps; a step transforms in,
// advances, and transforms back, so a physical-space checkpoint restarts the
// integration bitwise.
struct SolverState {
  VelocityField vel;        // physical
  VelocityField conv_prev;  // previous explicit term, physical
  bool has_history = false;
  double dpdx = 0.0;  // driving pressure gradient (force/volume)
  double t = 0.0;
  std::uint64_t step = 0;
  double nu = 0.0;

  explicit SolverState(const ChannelGrid& g)
      : vel(g, Rep::physical), conv_prev(g, Rep::physical) {}
};

// Poiseuille parabola plus solenoidal random perturbations, projected
// divergence-free, no-slip, exact discrete bulk velocity. Deterministic per seed.
VelocityField initial_condition(const ChannelGrid& g, double u_m,
                                double amplitude, std::uint64_t seed);

// Discrete Leray projector: per-(kx,kz) banded solve of the composed
// divergence-gradient operator, so the post-projection interior divergence
// vanishes to solver roundoff. v at the walls is never modified; the (0,0)
// pencil is corrected directly (mean v set to zero).
class Projector {
 public:
  explicit Projector(const ChannelGrid& g);
  ~Projector();
  Projector(const Projector&) = delete;
  Projector& operator=(const Projector&) = delete;

  // vel must be spectral; returns the scalar potential phi (pressure = phi/dt).
  ScalarField project(VelocityField& vel) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Convenience one-shot wrapper around Projector.
ScalarField pressure_projection(VelocityField& vel);

// Damps the highest retained Fourier mode in x and in z by (1 - alpha).
void stabilizing_mode_filter(VelocityField& vel, double alpha);

// Uniform interior correction of the streamwise velocity to the target bulk;
// returns the applied correction and accumulates it into dpdx as
// correction/dt. Operates on a physical-space state.
double mass_flux_controller(SolverState& state, double u_m, double dt);

double bulk_velocity(const ScalarField& u);  // Simpson-weighted, physical rep

// One full AB2/Crank-Nicolson fractional step with prefactored pencil solves.
class Stepper {
 public:
  Stepper(const ChannelGrid& g, const RunConfig& cfg);
  ~Stepper();
  Stepper(const Stepper&) = delete;
  Stepper& operator=(const Stepper&) = delete;

  void advance(SolverState& state);

  // Plane-averaged model stress component (1,2) from the last advance;
  // zero profile for model = none.
  const std::vector<double>& last_tau12_profile() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Single-shot step per the operation contract; builds a Stepper internally
// (use Stepper directly in loops).
void step(SolverState& state, const RunConfig& cfg);

}  // namespace rles
