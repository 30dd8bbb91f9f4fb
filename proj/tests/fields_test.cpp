#include <doctest.h>

#include <cmath>
#include <complex>

#include "rles/errors.hpp"
#include "rles/field.hpp"
#include "rles/operators.hpp"
#include "test_util.hpp"

using namespace rles;

TEST_CASE("transform round-trip is exact to roundoff") {
  const auto g = build_grid(testutil::small_grid());
  ScalarField f(*g, Rep::physical);
  testutil::fill_random(f, 42, /*zero_walls=*/false);
  const ScalarField orig = f;
  f.to_spectral();
  f.to_physical();
  double num = 0.0, den = 0.0;
  const std::span<const double> a = f.phys(), b = orig.phys();
  for (std::size_t p = 0; p < a.size(); ++p) {
    num += (a[p] - b[p]) * (a[p] - b[p]);
    den += b[p] * b[p];
  }
  CHECK(std::sqrt(num / den) < 1e-12);
}

TEST_CASE("Parseval identity between representations") {
  const auto g = build_grid(testutil::small_grid());
  ScalarField f(*g, Rep::physical);
  testutil::fill_random(f, 7, false);
  // Plane sum of squares at each y, physical vs r2c-weighted spectral.
  double phys_sum = 0.0;
  for (double x : f.phys()) phys_sum += x * x;
  phys_sum /= static_cast<double>(g->nx()) * g->nz();

  const ScalarField s = f.as(Rep::spectral);
  double spec_sum = 0.0;
  for (int m = 0; m < g->nxs(); ++m) {
    const double wt = (m == 0 || m == g->nx() / 2) ? 1.0 : 2.0;
    for (int k = 0; k < g->nz(); ++k)
      for (int j = 0; j < g->ny(); ++j)
        spec_sum += wt * std::norm(s.s(m, k, j));
  }
  CHECK(phys_sum == doctest::Approx(spec_sum).epsilon(1e-10));
}

TEST_CASE("representation accessors are guarded") {
  const auto g = build_grid(testutil::small_grid());
  ScalarField f(*g, Rep::physical);
  CHECK_THROWS_AS((void)f.spec(), representation_error);
  f.to_spectral();
  CHECK_THROWS_AS((void)f.phys(), representation_error);
}

TEST_CASE("gradient tensor") {
  const auto g = build_grid(testutil::small_grid());

  SUBCASE("linear shear differentiates exactly everywhere") {
    VelocityField vel(*g, Rep::physical);
    testutil::fill(vel.u, [](double, double y, double) { return y; });
    vel.v.zero();
    vel.w.zero();
    auto grad = gradient_tensor(vel);
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) {
        const ScalarField gp = grad[i * 3 + l].as(Rep::physical);
        for (double x : gp.phys()) {
          if (i == 0 && l == 1)
            CHECK(x == doctest::Approx(1.0).epsilon(1e-12));
          else
            CHECK(std::abs(x) < 1e-12);
        }
      }
  }

  SUBCASE("resolved x-mode differentiates spectrally") {
    VelocityField vel(*g, Rep::physical);
    const double kx = g->kx()[2];
    testutil::fill(vel.u,
                   [&](double x, double, double) { return std::sin(kx * x); });
    vel.v.zero();
    vel.w.zero();
    auto grad = gradient_tensor(vel);
    const ScalarField dudx = grad[0].as(Rep::physical);
    const ChannelGrid& gr = *g;
    for (int i = 0; i < gr.nx(); ++i)
      for (int k = 0; k < gr.nz(); ++k)
        for (int j = 0; j < gr.ny(); ++j)
          CHECK(dudx.p(i, k, j) ==
                doctest::Approx(kx * std::cos(kx * gr.dx() * i))
                    .epsilon(1e-11));
  }

  SUBCASE("wall-normal derivative of a quadratic converges at order two") {
    auto interior_err = [](int ny) {
      const auto gg = build_grid(testutil::small_grid(8, ny, 8));
      ScalarField f(*gg, Rep::physical);
      testutil::fill(f, [](double, double y, double) { return y * y; });
      const ScalarField d = deriv_y(f);
      double err = 0.0;
      for (int j = 1; j < gg->ny() - 1; ++j)
        err = std::max(err, std::abs(d.p(0, 0, j) - 2.0 * gg->y()[j]));
      return err;
    };
    const double order = std::log2(interior_err(17) / interior_err(33));
    CHECK(order == doctest::Approx(2.0).epsilon(0.1));
  }
}

TEST_CASE("divergence") {
  const auto g = build_grid(testutil::small_grid());
  VelocityField vel(*g, Rep::physical);

  SUBCASE("single-term field") {
    testutil::fill(vel.u, [](double x, double, double) { return std::sin(x); });
    vel.v.zero();
    vel.w.zero();
    const ScalarField div = divergence(vel).as(Rep::physical);
    for (int i = 0; i < g->nx(); ++i)
      CHECK(div.p(i, 3, 5) ==
            doctest::Approx(std::cos(g->dx() * i)).epsilon(1e-11));
  }
  SUBCASE("constant field") {
    testutil::fill(vel.u, [](double, double, double) { return 3.0; });
    testutil::fill(vel.v, [](double, double, double) { return -2.0; });
    testutil::fill(vel.w, [](double, double, double) { return 0.5; });
    const ScalarField div = divergence(vel).as(Rep::physical);
    CHECK(testutil::max_abs(div) < 1e-12);
  }
}

TEST_CASE("dealias drops exactly the modes beyond the 2/3 cutoff") {
  GridConfig gc = testutil::table1_grid();
  const auto g = build_grid(gc);

  SUBCASE("mode below the cutoff is untouched") {
    ScalarField f(*g, Rep::spectral);
    f.zero();
    f.s(1, 1, 5) = {0.5, -0.25};
    const ScalarField out = dealias(f);
    CHECK(out.s(1, 1, 5) == std::complex<double>(0.5, -0.25));
  }
  SUBCASE("Nyquist x-mode is removed") {
    ScalarField f(*g, Rep::spectral);
    f.zero();
    f.s(g->nx() / 2, 0, 5) = {1.0, 0.0};
    const ScalarField out = dealias(f);
    double total = 0.0;
    for (auto z : out.spec()) total += std::norm(z);
    CHECK(total == 0.0);
  }
  SUBCASE("physical input is rejected") {
    ScalarField f(*g, Rep::physical);
    CHECK_THROWS_AS((void)dealias(f), representation_error);
  }
  SUBCASE("retained energy equals the direct sum over kept modes") {
    ScalarField f(*g, Rep::physical);
    testutil::fill_random(f, 11, false);
    f.to_spectral();
    double kept = 0.0;
    for (int m = 0; m < g->nxs(); ++m)
      for (int k = 0; k < g->nz(); ++k)
        if (g->mode_kept(m, k))
          for (int j = 0; j < g->ny(); ++j) kept += std::norm(f.s(m, k, j));
    const ScalarField out = dealias(f);
    double total = 0.0;
    for (auto z : out.spec()) total += std::norm(z);
    CHECK(total == doctest::Approx(kept).epsilon(1e-12));
  }
}

TEST_CASE("y-derivative of an even profile is odd") {
  const auto g = build_grid(testutil::small_grid());
  ScalarField f(*g, Rep::physical);
  testutil::fill(f, [](double, double y, double) {
    return std::cos(2.0 * y) + y * y;
  });
  const ScalarField d = deriv_y(f);
  const int ny = g->ny();
  for (int j = 0; j < ny; ++j)
    CHECK(d.p(2, 3, j) == doctest::Approx(-d.p(2, 3, ny - 1 - j))
                              .epsilon(1e-12)
                              .scale(1.0));
}
