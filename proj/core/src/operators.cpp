#include "rles/operators.hpp"

#include <complex>

#include "rles/errors.hpp"

namespace rles {

namespace {
constexpr std::complex<double> kI(0.0, 1.0);
}

ScalarField deriv_x(const ScalarField& f) {
  const ChannelGrid& g = f.grid();
  auto in = f.spec();
  ScalarField out(g, Rep::spectral);
  auto o = out.spec();
  const int nyq = g.nx() / 2;
  for (int m = 0; m < g.nxs(); ++m) {
    const std::complex<double> fac = (m == nyq) ? 0.0 : kI * g.kx()[m];
    for (int k = 0; k < g.nz(); ++k) {
      const std::size_t base = g.sidx(m, k, 0);
      for (int j = 0; j < g.ny(); ++j) o[base + j] = fac * in[base + j];
    }
  }
  return out;
}

ScalarField deriv_z(const ScalarField& f) {
  const ChannelGrid& g = f.grid();
  auto in = f.spec();
  ScalarField out(g, Rep::spectral);
  auto o = out.spec();
  const int nyq = g.nz() / 2;
  for (int m = 0; m < g.nxs(); ++m)
    for (int k = 0; k < g.nz(); ++k) {
      const std::complex<double> fac = (k == nyq) ? 0.0 : kI * g.kz()[k];
      const std::size_t base = g.sidx(m, k, 0);
      for (int j = 0; j < g.ny(); ++j) o[base + j] = fac * in[base + j];
    }
  return out;
}

ScalarField deriv_y(const ScalarField& f) {
  const ChannelGrid& g = f.grid();
  ScalarField out(g, f.rep());
  if (f.rep() == Rep::physical) {
    auto in = f.phys();
    auto o = out.phys();
    const std::size_t npen = static_cast<std::size_t>(g.nx()) * g.nz();
    for (std::size_t p = 0; p < npen; ++p)
      deriv_y_pencil(g, in.data() + p * g.ny(), o.data() + p * g.ny());
  } else {
    auto in = f.spec();
    auto o = out.spec();
    const std::size_t npen = static_cast<std::size_t>(g.nxs()) * g.nz();
    for (std::size_t p = 0; p < npen; ++p)
      deriv_y_pencil(g, in.data() + p * g.ny(), o.data() + p * g.ny());
  }
  return out;
}

std::array<ScalarField, 9> gradient_tensor(const VelocityField& vel) {
  const ChannelGrid& g = vel.grid();
  std::array<ScalarField, 9> out{
      ScalarField(g, Rep::spectral), ScalarField(g, Rep::spectral),
      ScalarField(g, Rep::spectral), ScalarField(g, Rep::spectral),
      ScalarField(g, Rep::spectral), ScalarField(g, Rep::spectral),
      ScalarField(g, Rep::spectral), ScalarField(g, Rep::spectral),
      ScalarField(g, Rep::spectral)};
  for (int i = 0; i < 3; ++i) {
    ScalarField ci = vel.comp(i).as(Rep::spectral);
    out[i * 3 + 0] = deriv_x(ci);
    out[i * 3 + 1] = deriv_y(ci);
    out[i * 3 + 2] = deriv_z(ci);
  }
  return out;
}

ScalarField divergence(const VelocityField& vel) {
  ScalarField dudx = deriv_x(vel.u.as(Rep::spectral));
  ScalarField dvdy = deriv_y(vel.v.as(Rep::spectral));
  ScalarField dwdz = deriv_z(vel.w.as(Rep::spectral));
  auto a = dudx.spec();
  auto b = dvdy.spec();
  auto c = dwdz.spec();
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i] + c[i];
  return dudx;
}

void dealias_inplace(ScalarField& f) {
  const ChannelGrid& g = f.grid();
  auto s = f.spec();
  for (int m = 0; m < g.nxs(); ++m)
    for (int k = 0; k < g.nz(); ++k) {
      if (g.mode_kept(m, k)) continue;
      const std::size_t base = g.sidx(m, k, 0);
      for (int j = 0; j < g.ny(); ++j) s[base + j] = 0.0;
    }
}

ScalarField dealias(const ScalarField& f) {
  if (f.rep() != Rep::spectral)
    throw representation_error("dealias requires a spectral field");
  ScalarField out = f;
  dealias_inplace(out);
  return out;
}

}  // namespace rles
