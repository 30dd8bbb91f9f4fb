#include "rles/solver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "rles/errors.hpp"
#include "rles/operators.hpp"
#include "rles/parallel.hpp"

namespace rles {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);
constexpr double kTwoPi = 6.28318530717958647692;

// Nyquist-zeroed wavenumber factors, matching the derivative operators.
double kxf(const ChannelGrid& g, int m) {
  return (m == g.nx() / 2) ? 0.0 : g.kx()[m];
}
double kzf(const ChannelGrid& g, int k) {
  return (k == g.nz() / 2) ? 0.0 : g.kz()[k];
}

}  // namespace

void RunConfig::validate() const {
  grid.validate();
  sgs.validate();
  if (!(dt > 0.0)) throw config_error("run.dt must be > 0");
  if (!(re > 0.0)) throw config_error("run.re must be > 0");
  if (n_steps < 0) throw config_error("run.n_steps must be >= 0");
  if (stabilizer_alpha < 0.0 || stabilizer_alpha > 0.05)
    throw config_error("run.stabilizer_alpha must be in [0, 0.05]");
  if (perturbation < 0.0) throw config_error("run.perturbation must be >= 0");
  if (transient_steps < 0 || transient_steps > n_steps)
    throw config_error("run.transient_steps must be in [0, run.n_steps]");
}

double bulk_velocity(const ScalarField& u) {
  const ChannelGrid& g = u.grid();
  const std::vector<double> mean = plane_average(u);
  const auto& wq = g.quad_weights();
  double acc = 0.0;
  for (int j = 0; j < g.ny(); ++j) acc += wq[j] * mean[j];
  return acc / 2.0;
}

void stabilizing_mode_filter(VelocityField& vel, double alpha) {
  if (alpha == 0.0) return;
  const ChannelGrid& g = vel.grid();
  const double damp = 1.0 - alpha;
  const int mtop = g.x_cut();
  const int ntop = g.z_cut();
  for (int c = 0; c < 3; ++c) {
    auto s = vel.comp(c).spec();
    for (int m = 0; m < g.nxs(); ++m)
      for (int k = 0; k < g.nz(); ++k) {
        const int nabs = (k <= g.nz() / 2) ? k : g.nz() - k;
        const bool top = (m == mtop) || (nabs == ntop);
        if (!top) continue;
        double f = 1.0;
        if (m == mtop) f *= damp;
        if (nabs == ntop) f *= damp;
        const std::size_t base = g.sidx(m, k, 0);
        for (int j = 0; j < g.ny(); ++j) s[base + j] *= f;
      }
  }
}

double mass_flux_controller(SolverState& state, double u_m, double dt) {
  const ChannelGrid& g = state.vel.grid();
  const double bulk = bulk_velocity(state.vel.u);
  const auto& wq = g.quad_weights();
  double interior = 0.0;
  for (int j = 1; j < g.ny() - 1; ++j) interior += wq[j];
  const double c = 2.0 * (u_m - bulk) / interior;
  auto up = state.vel.u.phys();
  for (int i = 0; i < g.nx(); ++i)
    for (int k = 0; k < g.nz(); ++k) {
      double* col = up.data() + g.pidx(i, k, 0);
      for (int j = 1; j < g.ny() - 1; ++j) col[j] += c;
    }
  state.dpdx += c / dt;
  return c;
}

// ---------------------------------------------------------------------------
// Projector

struct Projector::Impl {
  const ChannelGrid& g;
  static constexpr int kl = 2, ku = 2, ldab = 2 * kl + ku + 1;
  // Base dense operator: Dy*Dy with the one-sided (Dy phi)|wall = 0 rows.
  std::vector<double> base;  // ny*ny, row-major
  std::vector<double> ab;    // per-pencil factored band matrices
  std::vector<lapack_int> ipiv;
  std::vector<char> active;  // pencil has k^2 > 0 and gets a solve

  explicit Impl(const ChannelGrid& grid) : g(grid) {
    const int ny = g.ny();
    std::vector<double> dym(static_cast<std::size_t>(ny) * ny, 0.0);
    dym[0 * ny + 0] = g.dwall_lo()[0];
    dym[0 * ny + 1] = g.dwall_lo()[1];
    dym[0 * ny + 2] = g.dwall_lo()[2];
    for (int j = 1; j < ny - 1; ++j) {
      const double den = g.y()[j + 1] - g.y()[j - 1];
      dym[static_cast<std::size_t>(j) * ny + j - 1] = -1.0 / den;
      dym[static_cast<std::size_t>(j) * ny + j + 1] = 1.0 / den;
    }
    dym[static_cast<std::size_t>(ny - 1) * ny + ny - 1] = g.dwall_hi()[0];
    dym[static_cast<std::size_t>(ny - 1) * ny + ny - 2] = g.dwall_hi()[1];
    dym[static_cast<std::size_t>(ny - 1) * ny + ny - 3] = g.dwall_hi()[2];

    base.assign(static_cast<std::size_t>(ny) * ny, 0.0);
    for (int i = 1; i < ny - 1; ++i)
      for (int j = 0; j < ny; ++j) {
        double acc = 0.0;
        for (int l = 0; l < ny; ++l)
          acc += dym[static_cast<std::size_t>(i) * ny + l] *
                 dym[static_cast<std::size_t>(l) * ny + j];
        base[static_cast<std::size_t>(i) * ny + j] = acc;
      }
    // Boundary rows enforce (Dy phi)|wall = 0 so the wall-normal velocity is
    // never touched at the walls.
    for (int j = 0; j < ny; ++j) {
      base[j] = dym[j];
      base[static_cast<std::size_t>(ny - 1) * ny + j] =
          dym[static_cast<std::size_t>(ny - 1) * ny + j];
    }

    const std::size_t npen = static_cast<std::size_t>(g.nxs()) * g.nz();
    ab.assign(npen * ldab * ny, 0.0);
    ipiv.assign(npen * ny, 0);
    active.assign(npen, 0);
    for (int m = 0; m < g.nxs(); ++m)
      for (int k = 0; k < g.nz(); ++k) {
        const std::size_t pen = static_cast<std::size_t>(m) * g.nz() + k;
        const double k2 = kxf(g, m) * kxf(g, m) + kzf(g, k) * kzf(g, k);
        if (k2 == 0.0) continue;  // mean and Nyquist-only pencils: direct fix
        active[pen] = 1;
        double* a = ab.data() + pen * ldab * ny;
        for (int j = 0; j < ny; ++j)
          for (int i = std::max(0, j - ku); i <= std::min(ny - 1, j + kl); ++i) {
            double v = base[static_cast<std::size_t>(i) * ny + j];
            if (i == j && i > 0 && i < ny - 1) v -= k2;
            a[static_cast<std::size_t>(j) * ldab + (kl + ku + i - j)] = v;
          }
        const lapack_int info = LAPACKE_dgbtrf(
            LAPACK_COL_MAJOR, ny, ny, kl, ku, a, ldab, ipiv.data() + pen * ny);
        if (info != 0)
          throw internal_error("singular pressure pencil (dgbtrf info=" +
                               std::to_string(info) + ")");
      }
  }
};

Projector::Projector(const ChannelGrid& g) : impl_(std::make_unique<Impl>(g)) {}
Projector::~Projector() = default;

ScalarField Projector::project(VelocityField& vel) const {
  const ChannelGrid& g = impl_->g;
  const int ny = g.ny();
  ScalarField phi(g, Rep::spectral);
  auto us = vel.u.spec();
  auto vs = vel.v.spec();
  auto ws = vel.w.spec();
  auto ps = phi.spec();
  phi.zero();
  phi.set_rep(Rep::spectral);

  const std::size_t npen = static_cast<std::size_t>(g.nxs()) * g.nz();
  parallel_for(npen, [&](std::size_t pen) {
    const int m = static_cast<int>(pen) / g.nz();
    const int k = static_cast<int>(pen) % g.nz();
    std::complex<double>* up = us.data() + pen * ny;
    std::complex<double>* vp = vs.data() + pen * ny;
    std::complex<double>* wp = ws.data() + pen * ny;
    if (!impl_->active[pen]) {
      // No periodic wavenumber content: continuity plus the wall conditions
      // force the wall-normal component to zero.
      for (int j = 0; j < ny; ++j) vp[j] = 0.0;
      return;
    }
    const std::complex<double> ikx = kI * kxf(g, m);
    const std::complex<double> ikz = kI * kzf(g, k);
    std::vector<std::complex<double>> dv(ny);
    deriv_y_pencil(g, vp, dv.data());
    std::vector<double> b(2 * ny, 0.0);
    for (int j = 1; j < ny - 1; ++j) {
      const std::complex<double> div = ikx * up[j] + dv[j] + ikz * wp[j];
      b[j] = div.real();
      b[ny + j] = div.imag();
    }
    const double* a = impl_->ab.data() + pen * Impl::ldab * ny;
    const lapack_int info = LAPACKE_dgbtrs(
        LAPACK_COL_MAJOR, 'N', ny, Impl::kl, Impl::ku, 2,
        const_cast<double*>(a), Impl::ldab,
        const_cast<lapack_int*>(impl_->ipiv.data() + pen * ny), b.data(), ny);
    if (info != 0) throw internal_error("pressure back-substitution failed");
    std::vector<std::complex<double>> f(ny), df(ny);
    for (int j = 0; j < ny; ++j) f[j] = {b[j], b[ny + j]};
    deriv_y_pencil(g, f.data(), df.data());
    for (int j = 0; j < ny; ++j) {
      ps[pen * ny + j] = f[j];
      up[j] -= ikx * f[j];
      wp[j] -= ikz * f[j];
      if (j > 0 && j < ny - 1) vp[j] -= df[j];
    }
  });
  return phi;
}

ScalarField pressure_projection(VelocityField& vel) {
  Projector proj(vel.grid());
  return proj.project(vel);
}

// ---------------------------------------------------------------------------
// Initial condition

VelocityField initial_condition(const ChannelGrid& g, double u_m,
                                double amplitude, std::uint64_t seed) {
  const int nx = g.nx(), ny = g.ny(), nz = g.nz();
  VelocityField vel(g, Rep::physical);
  auto up = vel.u.phys();
  for (int i = 0; i < nx; ++i)
    for (int k = 0; k < nz; ++k)
      for (int j = 0; j < ny; ++j)
        up[g.pidx(i, k, j)] = 1.5 * u_m * (1.0 - g.y()[j] * g.y()[j]);

  if (amplitude > 0.0) {
    // Solenoidal noise from the discrete curl of a random vector potential
    // that vanishes (with its normal derivative) at the walls.
    std::mt19937_64 rng(seed);
    auto unif = [&rng] { return (rng() >> 11) * 0x1.0p-53; };  // [0,1)
    const int nmodes = 3;
    VelocityField psi(g, Rep::physical);
    for (int c = 0; c < 3; ++c) {
      auto pp = psi.comp(c).phys();
      for (int mi = 1; mi <= nmodes; ++mi)
        for (int nk = 1; nk <= nmodes; ++nk) {
          const double a = 2.0 * unif() - 1.0;
          const double p1 = kTwoPi * unif();
          const double p2 = kTwoPi * unif();
          const double kx = kTwoPi * mi / g.config().lx;
          const double kz = kTwoPi * nk / g.config().lz;
          for (int i = 0; i < nx; ++i) {
            const double cx = std::cos(kx * (i * g.dx()) + p1);
            for (int k = 0; k < nz; ++k) {
              const double cz = std::cos(kz * (k * g.dz()) + p2);
              double* col = pp.data() + g.pidx(i, k, 0);
              for (int j = 0; j < ny; ++j) {
                const double e = 1.0 - g.y()[j] * g.y()[j];
                col[j] += a * cx * cz * e * e;
              }
            }
          }
        }
    }
    psi.to_spectral();
    ScalarField pu = deriv_y(psi.w), puz = deriv_z(psi.v);
    ScalarField pv = deriv_z(psi.u), pvx = deriv_x(psi.w);
    ScalarField pw = deriv_x(psi.v), pwy = deriv_y(psi.u);
    VelocityField pert(g, Rep::spectral);
    auto sub = [](ScalarField& a, const ScalarField& b, ScalarField& out) {
      auto x = a.spec();
      auto y = b.spec();
      auto o = out.spec();
      for (std::size_t n = 0; n < o.size(); ++n) o[n] = x[n] - y[n];
    };
    sub(pu, puz, pert.u);
    sub(pv, pvx, pert.v);
    sub(pw, pwy, pert.w);
    pert.to_physical();
    double sum2 = 0.0;
    for (int c = 0; c < 3; ++c) {
      auto p = pert.comp(c).phys();
      for (double v : p) sum2 += v * v;
    }
    const double rms = std::sqrt(sum2 / (3.0 * g.phys_size()));
    if (rms > 0.0) {
      const double scale = amplitude * u_m / rms;
      for (int c = 0; c < 3; ++c) {
        auto p = pert.comp(c).phys();
        auto vph = vel.comp(c).phys();
        for (std::size_t n = 0; n < p.size(); ++n) vph[n] += scale * p[n];
      }
    }
  }

  vel.to_spectral();
  dealias_inplace(vel.u);
  dealias_inplace(vel.v);
  dealias_inplace(vel.w);
  pressure_projection(vel);
  // No-slip cleanup: the one-sided curl leaves O(h^2)-size tangential wall
  // residue; interior divergence does not depend on these wall values.
  for (int c = 0; c < 3; ++c) {
    auto s = vel.comp(c).spec();
    const std::size_t npen = static_cast<std::size_t>(g.nxs()) * g.nz();
    for (std::size_t pen = 0; pen < npen; ++pen) {
      s[pen * ny] = 0.0;
      s[pen * ny + ny - 1] = 0.0;
    }
  }
  // Exact discrete bulk velocity via the interior-uniform correction.
  {
    auto us = vel.u.spec();
    const auto& wq = g.quad_weights();
    double bulk = 0.0, interior = 0.0;
    for (int j = 0; j < ny; ++j) bulk += wq[j] * us[j].real();
    bulk /= 2.0;
    for (int j = 1; j < ny - 1; ++j) interior += wq[j];
    const double c = 2.0 * (u_m - bulk) / interior;
    for (int j = 1; j < ny - 1; ++j) us[j] += c;
  }
  vel.to_physical();
  return vel;
}

// ---------------------------------------------------------------------------
// Stepper

struct Stepper::Impl {
  const ChannelGrid& g;
  RunConfig cfg;
  double nu, a;  // a = nu dt / 2
  Projector proj;
  FilterParams filter;
  std::vector<double> tau12;
  std::vector<double> max_history;  // recent max|u| samples for diagnostics

  Impl(const ChannelGrid& grid, const RunConfig& c)
      : g(grid), cfg(c), nu(c.nu()), a(c.nu() * c.dt / 2.0), proj(grid) {
    cfg.validate();
    filter = cfg.sgs.filter;
    filter.delta_profile = g.delta();
    tau12.assign(g.ny(), 0.0);
  }

  void maybe_dealias(ScalarField& f) const {
    if (cfg.enable_dealias) dealias_inplace(f);
  }

  // Skew-symmetric convective term plus the SGS force, spectral, dealiased.
  VelocityField explicit_term(const VelocityField& vs) {
    VelocityField e(g, Rep::spectral);
    std::array<ScalarField, 3> vph = {vs.u.as(Rep::physical),
                                      vs.v.as(Rep::physical),
                                      vs.w.as(Rep::physical)};
    std::array<ScalarField, 9> gs{
        deriv_x(vs.u), deriv_y(vs.u), deriv_z(vs.u),
        deriv_x(vs.v), deriv_y(vs.v), deriv_z(vs.v),
        deriv_x(vs.w), deriv_y(vs.w), deriv_z(vs.w)};

    // Divergence form: products u_i u_j.
    std::array<ScalarField, 6> prod{ScalarField(g), ScalarField(g), ScalarField(g),
                                    ScalarField(g), ScalarField(g), ScalarField(g)};
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        ScalarField& p = prod[SymmetricTensorField::index(i, j)];
        auto o = p.phys();
        auto x = vph[i].phys();
        auto y = vph[j].phys();
        for (std::size_t n = 0; n < o.size(); ++n) o[n] = x[n] * y[n];
        p.to_spectral();
        maybe_dealias(p);
      }
    for (int i = 0; i < 3; ++i) {
      ScalarField dx = deriv_x(prod[SymmetricTensorField::index(i, 0)]);
      ScalarField dy = deriv_y(prod[SymmetricTensorField::index(i, 1)]);
      ScalarField dz = deriv_z(prod[SymmetricTensorField::index(i, 2)]);
      auto o = e.comp(i).spec();
      auto A = dx.spec();
      auto b = dy.spec();
      auto c = dz.spec();
      for (std::size_t n = 0; n < o.size(); ++n) o[n] = A[n] + b[n] + c[n];
    }

    // Advective form: u_j du_i/dx_j.
    std::array<ScalarField, 9> gp{gs[0].as(Rep::physical), gs[1].as(Rep::physical),
                                  gs[2].as(Rep::physical), gs[3].as(Rep::physical),
                                  gs[4].as(Rep::physical), gs[5].as(Rep::physical),
                                  gs[6].as(Rep::physical), gs[7].as(Rep::physical),
                                  gs[8].as(Rep::physical)};
    for (int i = 0; i < 3; ++i) {
      ScalarField adv(g, Rep::physical);
      auto o = adv.phys();
      for (int j = 0; j < 3; ++j) {
        auto uj = vph[j].phys();
        auto gij = gp[i * 3 + j].phys();
        for (std::size_t n = 0; n < o.size(); ++n) o[n] += uj[n] * gij[n];
      }
      adv.to_spectral();
      maybe_dealias(adv);
      auto es = e.comp(i).spec();
      auto as_ = adv.spec();
      for (std::size_t n = 0; n < es.size(); ++n)
        es[n] = -0.5 * (es[n] + as_[n]);
    }

    // SGS force.
    if (cfg.sgs.model != SgsModel::none) {
      SymmetricTensorField tau(g);
      switch (cfg.sgs.model) {
        case SgsModel::gradient:
          tau = detail::tau_gradient_from(gp, filter);
          break;
        case SgsModel::rles:
          tau = detail::tau_gradient_from(gp, filter);
          for (auto& c : tau.c) {
            c.to_spectral();
            c = helmholtz_inverse(c, filter);
          }
          break;
        case SgsModel::smagorinsky:
          tau = detail::tau_smagorinsky_from(gp, filter, cfg.sgs.cs);
          break;
        default:
          break;
      }
      if (cfg.sgs.model == SgsModel::rles) {
        // Sampled stress is the smoothed one actually applied.
        ScalarField t12 = tau.comp(0, 1).as(Rep::physical);
        tau12 = plane_average(t12);
      } else {
        tau12 = plane_average(tau.comp(0, 1));
      }
      VelocityField f = sgs_force(tau);
      for (int i = 0; i < 3; ++i) {
        auto es = e.comp(i).spec();
        auto fs = f.comp(i).spec();
        for (std::size_t n = 0; n < es.size(); ++n) es[n] += fs[n];
      }
    } else {
      std::fill(tau12.begin(), tau12.end(), 0.0);
    }
    return e;
  }

  void viscous_solve(VelocityField& vel, const VelocityField& rhs_expl,
                     double dpdx) {
    const int ny = g.ny();
    const std::size_t npen = static_cast<std::size_t>(g.nxs()) * g.nz();
    for (int c = 0; c < 3; ++c) {
      auto vsp = vel.comp(c).spec();
      auto rsp = rhs_expl.comp(c).spec();
      parallel_for(npen, [&](std::size_t pen) {
        const int m = static_cast<int>(pen) / g.nz();
        const int k = static_cast<int>(pen) % g.nz();
        const double k2 =
            kxf(g, m) * kxf(g, m) + kzf(g, k) * kzf(g, k);
        std::complex<double>* u = vsp.data() + pen * ny;
        const std::complex<double>* r = rsp.data() + pen * ny;
        std::vector<std::complex<double>> rhs(ny), out(ny);
        rhs[0] = rhs[ny - 1] = 0.0;
        for (int j = 1; j < ny - 1; ++j) {
          const std::complex<double> lap =
              g.d2_lo()[j] * u[j - 1] + g.d2_di()[j] * u[j] +
              g.d2_up()[j] * u[j + 1] - k2 * u[j];
          rhs[j] = u[j] + a * lap + cfg.dt * r[j];
        }
        if (c == 0 && m == 0 && k == 0)
          for (int j = 1; j < ny - 1; ++j) rhs[j] += cfg.dt * dpdx;
        // (I - a(Dyy - k^2)) out = rhs, Dirichlet walls; Thomas solve.
        std::vector<double> lo(ny), di(ny), up(ny);
        di[0] = di[ny - 1] = 1.0;
        up[0] = lo[ny - 1] = 0.0;
        for (int j = 1; j < ny - 1; ++j) {
          lo[j] = -a * g.d2_lo()[j];
          di[j] = 1.0 + a * (k2 - g.d2_di()[j]);
          up[j] = -a * g.d2_up()[j];
        }
        for (int j = 1; j < ny; ++j) {
          const double f = lo[j] / di[j - 1];
          di[j] -= f * up[j - 1];
          rhs[j] -= f * rhs[j - 1];
        }
        out[ny - 1] = rhs[ny - 1] / di[ny - 1];
        for (int j = ny - 2; j >= 0; --j)
          out[j] = (rhs[j] - up[j] * out[j + 1]) / di[j];
        for (int j = 0; j < ny; ++j) u[j] = out[j];
      });
    }
  }
};

Stepper::Stepper(const ChannelGrid& g, const RunConfig& cfg)
    : impl_(std::make_unique<Impl>(g, cfg)) {}
Stepper::~Stepper() = default;

const std::vector<double>& Stepper::last_tau12_profile() const {
  return impl_->tau12;
}

void Stepper::advance(SolverState& state) {
  Impl& im = *impl_;
  const ChannelGrid& g = im.g;
  const int ny = g.ny();
  const RunConfig& cfg = im.cfg;

  VelocityField vs = state.vel;
  vs.to_spectral();
  if (cfg.enable_dealias) {
    dealias_inplace(vs.u);
    dealias_inplace(vs.v);
    dealias_inplace(vs.w);
  }

  VelocityField e = im.explicit_term(vs);

  // AB2 combination (explicit Euler bootstrap on the first step).
  VelocityField r = e;
  if (state.has_history) {
    VelocityField prev = state.conv_prev;
    prev.to_spectral();
    for (int c = 0; c < 3; ++c) {
      auto rs = r.comp(c).spec();
      auto ps = prev.comp(c).spec();
      for (std::size_t n = 0; n < rs.size(); ++n)
        rs[n] = 1.5 * rs[n] - 0.5 * ps[n];
    }
  }

  im.viscous_solve(vs, r, state.dpdx);
  im.proj.project(vs);

  // Restore no-slip on the tangential components (projection slip is O(dt)).
  for (int c = 0; c < 3; ++c) {
    auto s = vs.comp(c).spec();
    const std::size_t npen = static_cast<std::size_t>(g.nxs()) * g.nz();
    for (std::size_t pen = 0; pen < npen; ++pen) {
      s[pen * ny] = 0.0;
      s[pen * ny + ny - 1] = 0.0;
    }
  }

  stabilizing_mode_filter(vs, cfg.stabilizer_alpha);

  if (cfg.enable_controller) {
    auto us = vs.u.spec();
    const auto& wq = g.quad_weights();
    double bulk = 0.0, interior = 0.0;
    for (int j = 0; j < ny; ++j) bulk += wq[j] * us[j].real();
    bulk /= 2.0;
    for (int j = 1; j < ny - 1; ++j) interior += wq[j];
    const double c = 2.0 * (cfg.u_m - bulk) / interior;
    for (int j = 1; j < ny - 1; ++j) us[j] += c;
    state.dpdx += c / cfg.dt;
  }

  vs.to_physical();
  e.to_physical();
  state.vel = vs;
  state.conv_prev = e;
  state.has_history = true;
  state.t += cfg.dt;
  state.step += 1;

  double vmax = 0.0;
  for (int c = 0; c < 3; ++c)
    for (double v : state.vel.comp(c).phys()) vmax = std::max(vmax, std::abs(v));
  im.max_history.push_back(vmax);
  if (im.max_history.size() > 16)
    im.max_history.erase(im.max_history.begin());
  // Magnitudes beyond 1e100 overflow in the quadratic terms of the next
  // step, so they are treated as divergence before NaN ever appears.
  if (!std::isfinite(vmax) || vmax > 1e100) {
    std::ostringstream msg;
    msg << "solution diverged at step " << state.step << "; recent max|u|:";
    for (double v : im.max_history) msg << ' ' << v;
    throw divergence_error(msg.str());
  }
}

void step(SolverState& state, const RunConfig& cfg) {
  Stepper s(state.vel.grid(), cfg);
  s.advance(state);
}

}  // namespace rles
