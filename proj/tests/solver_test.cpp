#include <doctest.h>

#include <cmath>

#include "rles/errors.hpp"
#include "rles/solver.hpp"
#include "test_util.hpp"

using namespace rles;

namespace {

RunConfig laminar_config(const GridConfig& gc) {
  RunConfig cfg;
  cfg.grid = gc;
  cfg.dt = 1e-3;
  cfg.n_steps = 1;
  cfg.u_m = 1.0;
  cfg.re = 100.0;
  cfg.perturbation = 0.0;
  return cfg;
}

double max_state_diff(const SolverState& a, const SolverState& b) {
  double m = 0.0;
  for (int c = 0; c < 3; ++c) {
    auto pa = a.vel.comp(c).phys(), pb = b.vel.comp(c).phys();
    for (std::size_t q = 0; q < pa.size(); ++q)
      m = std::max(m, std::abs(pa[q] - pb[q]));
  }
  return m;
}

}  // namespace

TEST_CASE("initial condition") {
  const auto g = build_grid(testutil::small_grid());

  SUBCASE("unperturbed start is the exact parabola with exact bulk") {
    const VelocityField vel = initial_condition(*g, 15.63, 0.0, 1);
    CHECK(bulk_velocity(vel.u) == doctest::Approx(15.63).epsilon(1e-13));
    for (int j = 0; j < g->ny(); ++j) {
      const double y = g->y()[j];
      CHECK(vel.u.p(2, 3, j) ==
            doctest::Approx(1.5 * 15.63 * (1.0 - y * y)).epsilon(1e-11));
    }
    CHECK(testutil::max_abs(vel.v) == 0.0);
    CHECK(testutil::max_abs(vel.w) == 0.0);
  }

  SUBCASE("perturbed start is solenoidal with no-slip walls and exact bulk") {
    const VelocityField vel = initial_condition(*g, 15.63, 0.1, 9);
    double vmax = 0.0;
    for (int c = 0; c < 3; ++c)
      vmax = std::max(vmax, testutil::max_abs(vel.comp(c)));
    CHECK(testutil::max_interior_divergence(vel) < 1e-8 * vmax);
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < g->nx(); ++i)
        for (int k = 0; k < g->nz(); ++k) {
          CHECK(std::abs(vel.comp(c).p(i, k, 0)) < 1e-12);
          CHECK(std::abs(vel.comp(c).p(i, k, g->ny() - 1)) < 1e-12);
        }
    CHECK(bulk_velocity(vel.u) == doctest::Approx(15.63).epsilon(1e-13));
  }

  SUBCASE("deterministic per seed") {
    const VelocityField a = initial_condition(*g, 10.0, 0.2, 1234);
    const VelocityField b = initial_condition(*g, 10.0, 0.2, 1234);
    const VelocityField c = initial_condition(*g, 10.0, 0.2, 1235);
    for (int q = 0; q < 3; ++q) {
      auto pa = a.comp(q).phys(), pb = b.comp(q).phys();
      for (std::size_t p = 0; p < pa.size(); ++p) CHECK(pa[p] == pb[p]);
    }
    double diff = 0.0;
    auto pa = a.u.phys(), pc = c.u.phys();
    for (std::size_t p = 0; p < pa.size(); ++p)
      diff = std::max(diff, std::abs(pa[p] - pc[p]));
    CHECK(diff > 0.0);
  }
}

TEST_CASE("pressure projection") {
  const auto g = build_grid(testutil::small_grid());

  SUBCASE("idempotent on already-solenoidal fields") {
    VelocityField vel = initial_condition(*g, 1.0, 0.3, 77);
    vel.to_spectral();
    VelocityField once = vel;
    (void)pressure_projection(once);
    VelocityField twice = once;
    (void)pressure_projection(twice);
    double change = 0.0, scale = 0.0;
    for (int c = 0; c < 3; ++c) {
      auto a = once.comp(c).spec(), b = twice.comp(c).spec();
      for (std::size_t p = 0; p < a.size(); ++p) {
        change = std::max(change, std::abs(a[p] - b[p]));
        scale = std::max(scale, std::abs(a[p]));
      }
    }
    CHECK(change < 1e-10 * scale);
  }

  SUBCASE("random input: interior divergence drops by six orders or more") {
    VelocityField vel(*g, Rep::physical);
    testutil::fill_random(vel.u, 81);
    testutil::fill_random(vel.v, 82);
    testutil::fill_random(vel.w, 83);
    const double before = testutil::max_interior_divergence(vel);
    vel.to_spectral();
    (void)pressure_projection(vel);
    VelocityField vp(*g, Rep::physical);
    for (int c = 0; c < 3; ++c)
      vp.comp(c) = vel.comp(c).as(Rep::physical);
    const double after = testutil::max_interior_divergence(vp);
    CHECK(after < 1e-6 * before);
  }
}

TEST_CASE("laminar Poiseuille flow is a discrete equilibrium") {
  RunConfig cfg = laminar_config(testutil::small_grid(16, 33, 16));
  const auto g = build_grid(cfg.grid);
  Stepper stepper(*g, cfg);
  SolverState state(*g);
  state.vel = initial_condition(*g, cfg.u_m, 0.0, 1);
  state.nu = cfg.nu();
  state.dpdx = 3.0 * cfg.u_m * cfg.nu();  // laminar balance
  const SolverState start = state;
  for (int n = 0; n < 10; ++n) {
    const SolverState prev = state;
    stepper.advance(state);
    CHECK(max_state_diff(state, prev) < 1e-10);
    CHECK(bulk_velocity(state.vel.u) ==
          doctest::Approx(cfg.u_m).epsilon(1e-12));
  }
  CHECK(max_state_diff(state, start) < 1e-9);
  // dpdx balances the wall friction of the parabola: 3 u_m nu.
  CHECK(state.dpdx ==
        doctest::Approx(3.0 * cfg.u_m * cfg.nu()).epsilon(1e-6));
}

TEST_CASE("mass flux controller") {
  const auto g = build_grid(testutil::small_grid());
  SolverState state(*g);
  state.vel = initial_condition(*g, 15.0, 0.0, 1);

  SUBCASE("already on target: no-op") {
    const double before = state.dpdx;
    const double corr = mass_flux_controller(state, 15.0, 2e-4);
    CHECK(corr == doctest::Approx(0.0).scale(1.0));
    CHECK(state.dpdx == doctest::Approx(before).scale(1.0));
  }
  SUBCASE("bulk 15.0 corrected to 15.63 exactly") {
    (void)mass_flux_controller(state, 15.63, 2e-4);
    CHECK(bulk_velocity(state.vel.u) == doctest::Approx(15.63).epsilon(1e-13));
  }
  SUBCASE("Re 395 target honored") {
    (void)mass_flux_controller(state, 17.54, 2.5e-4);
    CHECK(bulk_velocity(state.vel.u) == doctest::Approx(17.54).epsilon(1e-13));
  }
  SUBCASE("walls stay no-slip") {
    (void)mass_flux_controller(state, 15.63, 2e-4);
    for (int i = 0; i < g->nx(); ++i)
      for (int k = 0; k < g->nz(); ++k)
        CHECK(state.vel.u.p(i, k, 0) == 0.0);
  }
}

TEST_CASE("stabilizing mode filter") {
  const auto g = build_grid(testutil::small_grid());

  SUBCASE("alpha zero is the identity") {
    VelocityField vel(*g, Rep::spectral);
    for (int c = 0; c < 3; ++c) vel.comp(c).zero();
    vel.u.s(2, 1, 5) = {1.0, 2.0};
    stabilizing_mode_filter(vel, 0.0);
    CHECK(vel.u.s(2, 1, 5) == std::complex<double>(1.0, 2.0));
  }
  SUBCASE("highest retained x mode damped by 1 - alpha") {
    VelocityField vel(*g, Rep::spectral);
    for (int c = 0; c < 3; ++c) vel.comp(c).zero();
    vel.u.s(g->x_cut(), 0, 5) = {1.0, 0.0};
    stabilizing_mode_filter(vel, 0.05);
    CHECK(vel.u.s(g->x_cut(), 0, 5).real() == doctest::Approx(0.95));
  }
  SUBCASE("lower modes bitwise untouched") {
    VelocityField vel(*g, Rep::spectral);
    for (int c = 0; c < 3; ++c) vel.comp(c).zero();
    vel.u.s(1, 1, 5) = {0.25, -0.75};
    stabilizing_mode_filter(vel, 0.05);
    CHECK(vel.u.s(1, 1, 5) == std::complex<double>(0.25, -0.75));
  }
}

TEST_CASE("stepping is deterministic") {
  RunConfig cfg = laminar_config(testutil::small_grid());
  cfg.re = 180.0;
  cfg.u_m = 15.63;
  cfg.dt = 2e-4;
  cfg.sgs.model = SgsModel::gradient;
  const auto g = build_grid(cfg.grid);
  auto run_five = [&]() {
    Stepper stepper(*g, cfg);
    SolverState s(*g);
    s.vel = initial_condition(*g, cfg.u_m, 0.1, 3);
    s.nu = cfg.nu();
    for (int n = 0; n < 5; ++n) stepper.advance(s);
    return s;
  };
  const SolverState a = run_five();
  const SolverState b = run_five();
  for (int c = 0; c < 3; ++c) {
    auto pa = a.vel.comp(c).phys(), pb = b.vel.comp(c).phys();
    for (std::size_t p = 0; p < pa.size(); ++p) CHECK(pa[p] == pb[p]);
  }
  CHECK(a.dpdx == b.dpdx);
}

TEST_CASE("post-step invariants on perturbed states") {
  RunConfig cfg = laminar_config(testutil::small_grid());
  cfg.re = 180.0;
  cfg.u_m = 15.63;
  cfg.dt = 2e-4;
  cfg.sgs.model = SgsModel::rles;
  const auto g = build_grid(cfg.grid);
  Stepper stepper(*g, cfg);
  SolverState state(*g);
  state.vel = initial_condition(*g, cfg.u_m, 0.3, 5);
  state.nu = cfg.nu();
  for (int n = 0; n < 20; ++n) {
    stepper.advance(state);
    double vmax = 0.0;
    for (int c = 0; c < 3; ++c)
      vmax = std::max(vmax, testutil::max_abs(state.vel.comp(c)));
    CHECK(testutil::max_interior_divergence(state.vel) < 1e-8 * vmax);
    CHECK(bulk_velocity(state.vel.u) ==
          doctest::Approx(cfg.u_m).epsilon(1e-12));
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < g->nx(); ++i)
        for (int k = 0; k < g->nz(); ++k) {
          CHECK(std::abs(state.vel.comp(c).p(i, k, 0)) < 1e-12);
          CHECK(std::abs(state.vel.comp(c).p(i, k, g->ny() - 1)) < 1e-12);
        }
  }
}

TEST_CASE("mirror symmetry is preserved over one hundred steps") {
  RunConfig cfg = laminar_config(testutil::small_grid());
  cfg.re = 180.0;
  cfg.u_m = 15.63;
  cfg.dt = 2e-4;
  cfg.sgs.model = SgsModel::gradient;
  const auto g = build_grid(cfg.grid);
  const int ny = g->ny();

  SolverState state(*g);
  {
    VelocityField vel = initial_condition(*g, cfg.u_m, 0.1, 11);
    // Symmetrize under (y -> -y, v -> -v); parity commutes with all the
    // discrete operators, so the projection constraint survives.
    VelocityField sym(*g, Rep::physical);
    for (int i = 0; i < g->nx(); ++i)
      for (int k = 0; k < g->nz(); ++k)
        for (int j = 0; j < ny; ++j) {
          const int jm = ny - 1 - j;
          sym.u.p(i, k, j) = 0.5 * (vel.u.p(i, k, j) + vel.u.p(i, k, jm));
          sym.v.p(i, k, j) = 0.5 * (vel.v.p(i, k, j) - vel.v.p(i, k, jm));
          sym.w.p(i, k, j) = 0.5 * (vel.w.p(i, k, j) + vel.w.p(i, k, jm));
        }
    state.vel = sym;
  }
  state.nu = cfg.nu();
  Stepper stepper(*g, cfg);
  for (int n = 0; n < 100; ++n) stepper.advance(state);
  double asym = 0.0;
  for (int i = 0; i < g->nx(); ++i)
    for (int k = 0; k < g->nz(); ++k)
      for (int j = 0; j < ny; ++j) {
        const int jm = ny - 1 - j;
        asym = std::max(asym,
                        std::abs(state.vel.u.p(i, k, j) - state.vel.u.p(i, k, jm)));
        asym = std::max(asym,
                        std::abs(state.vel.v.p(i, k, j) + state.vel.v.p(i, k, jm)));
        asym = std::max(asym,
                        std::abs(state.vel.w.p(i, k, j) - state.vel.w.p(i, k, jm)));
      }
  CHECK(asym < 1e-10);
}

TEST_CASE("blow-up raises a divergence error with history") {
  RunConfig cfg = laminar_config(testutil::small_grid());
  cfg.dt = 1.0;
  cfg.re = 1e6;
  cfg.u_m = 1.0;
  const auto g = build_grid(cfg.grid);
  Stepper stepper(*g, cfg);
  SolverState state(*g);
  state.vel = initial_condition(*g, cfg.u_m, 0.1, 1);
  for (int c = 0; c < 3; ++c)
    for (auto& x : state.vel.comp(c).phys()) x *= 1e150;
  state.nu = cfg.nu();
  bool threw = false;
  try {
    for (int n = 0; n < 50; ++n) stepper.advance(state);
  } catch (const divergence_error& e) {
    threw = true;
    CHECK(std::string(e.what()).find("step") != std::string::npos);
  }
  CHECK(threw);
}
