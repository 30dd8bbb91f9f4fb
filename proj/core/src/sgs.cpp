#include "rles/sgs.hpp"

#include <cmath>

#include "rles/errors.hpp"
#include "rles/operators.hpp"

namespace rles {

SgsModel sgs_model_from_string(const std::string& name) {
  if (name == "none") return SgsModel::none;
  if (name == "smagorinsky") return SgsModel::smagorinsky;
  if (name == "gradient") return SgsModel::gradient;
  if (name == "rles") return SgsModel::rles;
  throw config_error("unknown SGS model '" + name +
                     "' (expected none|smagorinsky|gradient|rles)");
}

std::string to_string(SgsModel m) {
  switch (m) {
    case SgsModel::none: return "none";
    case SgsModel::smagorinsky: return "smagorinsky";
    case SgsModel::gradient: return "gradient";
    case SgsModel::rles: return "rles";
  }
  return "?";
}

void SgsConfig::validate() const {
  if (model == SgsModel::smagorinsky && !(cs > 0.0))
    throw config_error("sgs.cs must be > 0 for the Smagorinsky model");
  if (!(filter.gamma > 0.0)) throw config_error("sgs.gamma must be > 0");
}

namespace {

std::array<ScalarField, 9> physical_gradients(const VelocityField& vel) {
  std::array<ScalarField, 9> gp = gradient_tensor(vel);
  for (auto& f : gp) f.to_physical();
  return gp;
}

}  // namespace

std::pair<SymmetricTensorField, ScalarField> strain_rate(const VelocityField& vel) {
  const ChannelGrid& g = vel.grid();
  auto gp = physical_gradients(vel);
  SymmetricTensorField s(g, Rep::physical);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      auto out = s.comp(i, j).phys();
      auto a = gp[i * 3 + j].phys();
      auto b = gp[j * 3 + i].phys();
      for (std::size_t n = 0; n < out.size(); ++n) out[n] = 0.5 * (a[n] + b[n]);
    }
  ScalarField mag(g, Rep::physical);
  auto mp = mag.phys();
  for (std::size_t n = 0; n < mp.size(); ++n) {
    double ss = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double v = s.comp(i, j).phys()[n];
        ss += v * v;
      }
    mp[n] = std::sqrt(2.0 * ss);
  }
  return {std::move(s), std::move(mag)};
}

namespace detail {

SymmetricTensorField tau_gradient_from(const std::array<ScalarField, 9>& gp,
                                       const FilterParams& p) {
  const ChannelGrid& g = gp[0].grid();
  SymmetricTensorField tau(g, Rep::physical);
  const int ny = g.ny();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      auto out = tau.comp(i, j).phys();
      for (std::size_t n = 0; n < out.size(); ++n) {
        const int jy = static_cast<int>(n % ny);
        const double d = p.width_at(jy);
        double acc = 0.0;
        for (int l = 0; l < 3; ++l)
          acc += gp[i * 3 + l].phys()[n] * gp[j * 3 + l].phys()[n];
        out[n] = d * d / (2.0 * p.gamma) * acc;
      }
    }
  return tau;
}

SymmetricTensorField tau_smagorinsky_from(const std::array<ScalarField, 9>& gp,
                                          const FilterParams& p, double cs) {
  const ChannelGrid& g = gp[0].grid();
  const int ny = g.ny();
  SymmetricTensorField tau(g, Rep::physical);
  // |S| first.
  const std::size_t np = g.phys_size();
  std::vector<double> mag(np, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto a = gp[i * 3 + j].phys();
      auto b = gp[j * 3 + i].phys();
      for (std::size_t n = 0; n < np; ++n) {
        const double s = 0.5 * (a[n] + b[n]);
        mag[n] += 2.0 * s * s;
      }
    }
  for (std::size_t n = 0; n < np; ++n) mag[n] = std::sqrt(mag[n]);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      auto out = tau.comp(i, j).phys();
      auto a = gp[i * 3 + j].phys();
      auto b = gp[j * 3 + i].phys();
      for (std::size_t n = 0; n < np; ++n) {
        const int jy = static_cast<int>(n % ny);
        const double cd = cs * p.width_at(jy);
        out[n] = -cd * cd * mag[n] * 0.5 * (a[n] + b[n]);
      }
    }
  return tau;
}

}  // namespace detail

SymmetricTensorField tau_gradient(const VelocityField& vel, const FilterParams& p) {
  return detail::tau_gradient_from(physical_gradients(vel), p);
}

SymmetricTensorField tau_rles(const VelocityField& vel, const FilterParams& p) {
  SymmetricTensorField tau = tau_gradient(vel, p);
  for (auto& c : tau.c) {
    c.to_spectral();
    c = helmholtz_inverse(c, p);
  }
  return tau;
}

SymmetricTensorField tau_smagorinsky(const VelocityField& vel,
                                     const FilterParams& p, double cs) {
  return detail::tau_smagorinsky_from(physical_gradients(vel), p, cs);
}

VelocityField sgs_force(const SymmetricTensorField& tau) {
  const ChannelGrid& g = tau.c[0].grid();
  VelocityField force(g, Rep::spectral);
  for (int i = 0; i < 3; ++i) {
    ScalarField ti0 = tau.comp(i, 0).as(Rep::spectral);
    ScalarField ti1 = tau.comp(i, 1).as(Rep::spectral);
    ScalarField ti2 = tau.comp(i, 2).as(Rep::spectral);
    dealias_inplace(ti0);
    dealias_inplace(ti1);
    dealias_inplace(ti2);
    ScalarField fx = deriv_x(ti0);
    ScalarField fy = deriv_y(ti1);
    ScalarField fz = deriv_z(ti2);
    auto o = force.comp(i).spec();
    auto a = fx.spec();
    auto b = fy.spec();
    auto c = fz.spec();
    for (std::size_t n = 0; n < o.size(); ++n) o[n] = -(a[n] + b[n] + c[n]);
  }
  return force;
}

}  // namespace rles
