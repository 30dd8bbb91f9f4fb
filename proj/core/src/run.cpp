#include "rles/run.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rles/config.hpp"
#include "rles/errors.hpp"

#ifndef RLES_VERSION
#define RLES_VERSION "unknown"
#endif

namespace rles {

namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path.string() + " for writing");
  out << text;
}

std::string checkpoint_name(std::uint64_t step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "checkpoint_%08" PRIu64 ".bin", step);
  return buf;
}

void write_manifest(const fs::path& dir, const RunConfig& cfg,
                    const RunResult& res, long n_samples, bool has_profiles) {
  std::ostringstream m;
  m.precision(12);
  m << "version = " << RLES_VERSION << '\n'
    << "final_step = " << res.final_step << '\n'
    << "final_time = " << res.final_time << '\n'
    << "wall_seconds = " << res.wall_seconds << '\n'
    << "n_samples = " << n_samples << '\n';
  if (has_profiles) {
    m << "u_tau = " << res.profiles.u_tau << '\n'
      << "re_tau = " << res.profiles.re_tau << '\n'
      << "u_tau_lower = " << res.profiles.u_tau_lower << '\n'
      << "u_tau_upper = " << res.profiles.u_tau_upper << '\n'
      << "shear_residual = " << res.profiles.shear_residual << '\n'
      << "wall_shear_warning = " << (res.profiles.wall_shear_warning ? 1 : 0)
      << '\n';
  }
  m << "# resolved configuration\n";
  std::istringstream cfg_lines(resolved_config_text(cfg));
  std::string line;
  while (std::getline(cfg_lines, line)) m << "config." << line << '\n';
  write_text(dir / "manifest.txt", m.str());
}

}  // namespace

RunResult run_simulation(const RunConfig& cfg, const std::string& output_dir,
                         const Checkpoint* resume) {
  cfg.validate();
  const fs::path dir(output_dir);
  fs::create_directories(dir);
  const std::string config_text = resolved_config_text(cfg);
  write_text(dir / "config.resolved", config_text);

  const auto grid = build_grid(cfg.grid);
  SolverState state(*grid);
  if (resume) {
    restore_state(*resume, state);
  } else {
    state.vel = initial_condition(*grid, cfg.u_m, cfg.perturbation, cfg.seed);
    // Laminar balance as the starting guess; the flux controller adapts it.
    state.dpdx = 3.0 * cfg.u_m * cfg.nu();
  }
  state.nu = cfg.nu();

  Stepper stepper(*grid, cfg);
  FlowStatistics stats(*grid);

  const std::uint64_t total =
      static_cast<std::uint64_t>(cfg.transient_steps + cfg.n_steps);
  const std::uint64_t transient = static_cast<std::uint64_t>(cfg.transient_steps);
  const auto t_start = std::chrono::steady_clock::now();

  while (state.step < total) {
    stepper.advance(state);  // divergence_error propagates; prior periodic
                             // checkpoints stay on disk
    if (state.step > transient)
      stats.accumulate(state, &stepper.last_tau12_profile());
    if (cfg.checkpoint_every > 0 &&
        state.step % static_cast<std::uint64_t>(cfg.checkpoint_every) == 0)
      write_checkpoint((dir / checkpoint_name(state.step)).string(), state,
                       cfg.grid, config_text);
  }

  RunResult res;
  res.output_dir = output_dir;
  res.final_step = state.step;
  res.final_time = state.t;
  res.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();

  write_checkpoint((dir / "checkpoint.bin").string(), state, cfg.grid,
                   config_text);

  const bool has_profiles = stats.n_samples() > 0;
  if (has_profiles) {
    res.profiles = finalize(stats, cfg.nu());
    write_profiles_csv(res.profiles, (dir / "profiles.csv").string());
    write_shear_balance_csv(shear_stress_balance(res.profiles),
                            (dir / "shear_balance.csv").string());
  }
  write_manifest(dir, cfg, res, stats.n_samples(), has_profiles);
  return res;
}

RunResult resume_run(const std::string& checkpoint_path,
                     std::int64_t extra_steps, const std::string& output_dir) {
  const Checkpoint ck = read_checkpoint(checkpoint_path);
  RunConfig cfg = make_run_config(
      parse_config_text(ck.config_text, checkpoint_path + " (embedded config)"));
  const std::int64_t target =
      static_cast<std::int64_t>(ck.step) + extra_steps - cfg.transient_steps;
  if (target <= 0)
    throw config_error("resume target of " + std::to_string(extra_steps) +
                       " steps ends inside the transient phase");
  cfg.n_steps = target;
  return run_simulation(cfg, output_dir, &ck);
}

}  // namespace rles
