// Microbenchmarks for the hot paths of a channel step: transforms, the
// per-pencil Helmholtz solves, the pressure projection, and a full step.

#include <benchmark/benchmark.h>

#include "rles/filters.hpp"
#include "rles/solver.hpp"

namespace {

using namespace rles;

GridConfig bench_grid() {
  GridConfig gc;
  gc.nx = 36;
  gc.ny = 37;
  gc.nz = 36;
  gc.lx = 4.0 * std::numbers::pi;
  gc.lz = 4.0 * std::numbers::pi / 3.0;
  return gc;
}

RunConfig bench_config(SgsModel model) {
  RunConfig cfg;
  cfg.grid = bench_grid();
  cfg.dt = 2e-4;
  cfg.n_steps = 1;
  cfg.u_m = 15.63;
  cfg.re = 180.0;
  cfg.sgs.model = model;
  return cfg;
}

void BM_TransformRoundtrip(benchmark::State& state) {
  const auto g = build_grid(bench_grid());
  ScalarField f(*g, Rep::physical);
  auto ph = f.phys();
  for (std::size_t p = 0; p < ph.size(); ++p) ph[p] = std::sin(0.1 * p);
  for (auto _ : state) {
    f.to_spectral();
    f.to_physical();
    benchmark::DoNotOptimize(f.phys().data());
  }
}
BENCHMARK(BM_TransformRoundtrip);

void BM_HelmholtzInverse(benchmark::State& state) {
  const auto g = build_grid(bench_grid());
  FilterParams params;
  params.delta_profile.assign(g->delta().begin(), g->delta().end());
  ScalarField f(*g, Rep::physical);
  auto ph = f.phys();
  for (std::size_t p = 0; p < ph.size(); ++p) ph[p] = std::sin(0.1 * p);
  f.to_spectral();
  for (auto _ : state) {
    ScalarField out = helmholtz_inverse(f, params);
    benchmark::DoNotOptimize(out.spec().data());
  }
}
BENCHMARK(BM_HelmholtzInverse);

void BM_Projection(benchmark::State& state) {
  const auto g = build_grid(bench_grid());
  const Projector proj(*g);
  VelocityField vel = initial_condition(*g, 15.63, 0.1, 7);
  vel.to_spectral();
  for (auto _ : state) {
    VelocityField work = vel;
    ScalarField phi = proj.project(work);
    benchmark::DoNotOptimize(phi.spec().data());
  }
}
BENCHMARK(BM_Projection);

void BM_FullStep(benchmark::State& state) {
  const SgsModel model = static_cast<SgsModel>(state.range(0));
  const RunConfig cfg = bench_config(model);
  const auto g = build_grid(cfg.grid);
  Stepper stepper(*g, cfg);
  SolverState s(*g);
  s.vel = initial_condition(*g, cfg.u_m, cfg.perturbation, cfg.seed);
  s.nu = cfg.nu();
  for (auto _ : state) stepper.advance(s);
  state.SetLabel(to_string(model));
}
BENCHMARK(BM_FullStep)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
