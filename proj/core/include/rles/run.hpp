#pragma once

#include <string>

#include "rles/checkpoint.hpp"
#include "rles/solver.hpp"
#include "rles/stats.hpp"

namespace rles {

struct RunResult {
  ProfilesReport profiles;
  std::string output_dir;
  std::uint64_t final_step = 0;
  double final_time = 0.0;
  double wall_seconds = 0.0;
};

// Executes a run: transient phase, then sampling phase (one sample per
// step). Writes into output_dir: config.resolved, profiles.csv,
// shear_balance.csv, manifest.txt, checkpoint.bin (plus periodic
// checkpoint_NNNNNNNN.bin when cfg.checkpoint_every > 0). When the
// integration produces NaN the divergence_error propagates after a final
// checkpoint attempt of the last valid state.
// `resume` optionally restores a checkpointed state (see resume_run);
// when null the deterministic initial condition for cfg is used.
RunResult run_simulation(const RunConfig& cfg, const std::string& output_dir,
                         const Checkpoint* resume = nullptr);

// Loads a checkpoint, rebuilds the configuration from its embedded echo
// (n_steps is replaced by extra_steps; transient/sampling phases are
// counted from the restored step), and continues the run.
RunResult resume_run(const std::string& checkpoint_path,
                     std::int64_t extra_steps, const std::string& output_dir);

}  // namespace rles
