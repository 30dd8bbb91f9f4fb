#include "rles/apriori.hpp"

#include <cmath>
#include <random>

#include "rles/errors.hpp"

namespace rles {

namespace {

double uniform01(std::mt19937_64& rng) {
  // Explicit bit conversion: identical across standard libraries.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct TensorIndexPair {
  int i, j;
};
// Component order 00, 01, 02, 11, 12, 22 (see BoxTensor).
constexpr TensorIndexPair kPairs[6] = {{0, 0}, {0, 1}, {0, 2},
                                       {1, 1}, {1, 2}, {2, 2}};

const char* component_name(int c) {
  static const char* names[6] = {"11", "12", "13", "22", "23", "33"};
  return names[c];
}

// Gaussian-filtered spectra of the three velocity components.
void filtered_spectra(const BoxTransform& t, const BoxVelocity& vel,
                      const FilterParams& params,
                      std::vector<std::complex<double>> out[3]) {
  for (int c = 0; c < 3; ++c) {
    t.forward(vel.comp(c), out[c]);
    box_gaussian_filter(t, out[c], params.delta, params.gamma);
  }
}

// Nine physical velocity-gradient arrays g[i*3+l] = d u_i / d x_l from the
// given spectra.
void physical_gradients(const BoxTransform& t,
                        const std::vector<std::complex<double>> spec[3],
                        std::vector<double> g[9]) {
  const int n = t.n();
  const int nh = n / 2 + 1;
  std::vector<std::complex<double>> d(t.spec_size());
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l) {
      std::size_t idx = 0;
      for (int a = 0; a < n; ++a) {
        const double ka = t.wavenumber(a);
        for (int b = 0; b < n; ++b) {
          const double kb = t.wavenumber(b);
          for (int c = 0; c < nh; ++c, ++idx) {
            const double kl = l == 0 ? ka : l == 1 ? kb : c;
            d[idx] = std::complex<double>(0.0, kl) * spec[i][idx];
          }
        }
      }
      t.backward(d, g[i * 3 + l]);
    }
}

}  // namespace

BoxVelocity synthesize_field(int n, double slope, std::uint64_t seed) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw config_error("synthetic box size must be a power of two >= 16, got " +
                       std::to_string(n));
  BoxTransform t(n);
  BoxVelocity vel;
  vel.n = n;

  std::mt19937_64 rng(seed);
  std::vector<std::complex<double>> spec[3];
  for (int c = 0; c < 3; ++c) {
    std::vector<double>& r = vel.comp(c);
    r.resize(t.real_size());
    for (double& x : r) x = 2.0 * uniform01(rng) - 1.0;
    t.forward(r, spec[c]);
  }

  const int nh = n / 2 + 1;
  // Cutoff at n/4 keeps all quadratic products representable on the n grid,
  // so the exact subfilter stress carries no truncation error.
  const double kcut2 = static_cast<double>(n) * n / 16.0;
  std::size_t idx = 0;
  for (int a = 0; a < n; ++a) {
    const double ka = t.wavenumber(a);
    for (int b = 0; b < n; ++b) {
      const double kb = t.wavenumber(b);
      for (int c = 0; c < nh; ++c, ++idx) {
        const double kc = c;
        const double k2 = ka * ka + kb * kb + kc * kc;
        const bool nyquist = a == n / 2 || b == n / 2 || c == n / 2;
        if (k2 == 0.0 || k2 > kcut2 || nyquist) {
          for (int q = 0; q < 3; ++q) spec[q][idx] = 0.0;
          continue;
        }
        // Per-mode amplitude k^((slope-2)/2) gives shell energy ~ k^slope;
        // plateau below k = 2.
        const double keff = std::max(std::sqrt(k2), 2.0);
        const double amp = std::pow(keff, 0.5 * (slope - 2.0));
        std::complex<double> uh[3] = {spec[0][idx] * amp, spec[1][idx] * amp,
                                      spec[2][idx] * amp};
        const std::complex<double> kdotu = ka * uh[0] + kb * uh[1] + kc * uh[2];
        spec[0][idx] = uh[0] - ka * kdotu / k2;
        spec[1][idx] = uh[1] - kb * kdotu / k2;
        spec[2][idx] = uh[2] - kc * kdotu / k2;
      }
    }
  }

  double sumsq = 0.0;
  for (int c = 0; c < 3; ++c) {
    t.backward(spec[c], vel.comp(c));
    for (double x : vel.comp(c)) sumsq += x * x;
  }
  const double rms = std::sqrt(sumsq / (3.0 * t.real_size()));
  const double scale = rms > 0.0 ? 1.0 / rms : 1.0;
  for (int c = 0; c < 3; ++c)
    for (double& x : vel.comp(c)) x *= scale;
  return vel;
}

BoxTensor exact_subfilter_stress(const BoxVelocity& vel,
                                 const FilterParams& params) {
  BoxTransform t(vel.n);
  PaddedMultiplier pm(vel.n);
  std::vector<std::complex<double>> raw[3], flt[3];
  for (int c = 0; c < 3; ++c) {
    t.forward(vel.comp(c), raw[c]);
    flt[c] = raw[c];
    box_gaussian_filter(t, flt[c], params.delta, params.gamma);
  }

  BoxTensor tau;
  tau.n = vel.n;
  std::vector<std::complex<double>> prod;
  std::vector<double> term1, term2;
  for (int c = 0; c < 6; ++c) {
    const auto [i, j] = kPairs[c];
    pm.multiply(t, raw[i], raw[j], prod);
    box_gaussian_filter(t, prod, params.delta, params.gamma);
    t.backward(prod, term1);
    pm.multiply(t, flt[i], flt[j], prod);
    t.backward(prod, term2);
    tau.c[c].resize(t.real_size());
    for (std::size_t p = 0; p < term1.size(); ++p)
      tau.c[c][p] = term1[p] - term2[p];
  }
  return tau;
}

BoxTensor box_gradient_stress(const BoxVelocity& vel,
                              const FilterParams& params) {
  BoxTransform t(vel.n);
  std::vector<std::complex<double>> flt[3];
  filtered_spectra(t, vel, params, flt);
  std::vector<double> g[9];
  physical_gradients(t, flt, g);

  const double coef = params.delta * params.delta / (2.0 * params.gamma);
  BoxTensor tau;
  tau.n = vel.n;
  for (int c = 0; c < 6; ++c) {
    const auto [i, j] = kPairs[c];
    tau.c[c].resize(t.real_size());
    for (std::size_t p = 0; p < tau.c[c].size(); ++p)
      tau.c[c][p] = coef * (g[i * 3 + 0][p] * g[j * 3 + 0][p] +
                            g[i * 3 + 1][p] * g[j * 3 + 1][p] +
                            g[i * 3 + 2][p] * g[j * 3 + 2][p]);
  }
  return tau;
}

BoxTensor box_rles_stress(const BoxVelocity& vel, const FilterParams& params) {
  BoxTensor tau = box_gradient_stress(vel, params);
  BoxTransform t(vel.n);
  const int n = vel.n;
  const int nh = n / 2 + 1;
  const double a = params.delta * params.delta / (4.0 * params.gamma);
  std::vector<std::complex<double>> spec;
  for (int c = 0; c < 6; ++c) {
    t.forward(tau.c[c], spec);
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      const double ki = t.wavenumber(i);
      for (int j = 0; j < n; ++j) {
        const double kj = t.wavenumber(j);
        for (int k = 0; k < nh; ++k, ++idx) {
          const double k2 = ki * ki + kj * kj + static_cast<double>(k) * k;
          spec[idx] /= 1.0 + a * k2;
        }
      }
    }
    t.backward(spec, tau.c[c]);
  }
  return tau;
}

BoxTensor box_smagorinsky_stress(const BoxVelocity& vel,
                                 const FilterParams& params, double cs) {
  BoxTransform t(vel.n);
  std::vector<std::complex<double>> flt[3];
  filtered_spectra(t, vel, params, flt);
  std::vector<double> g[9];
  physical_gradients(t, flt, g);

  const double coef = cs * params.delta * cs * params.delta;
  BoxTensor tau;
  tau.n = vel.n;
  for (int c = 0; c < 6; ++c) tau.c[c].resize(t.real_size());
  for (std::size_t p = 0; p < t.real_size(); ++p) {
    double s[6];
    for (int c = 0; c < 6; ++c) {
      const auto [i, j] = kPairs[c];
      s[c] = 0.5 * (g[i * 3 + j][p] + g[j * 3 + i][p]);
    }
    const double mag =
        std::sqrt(2.0 * (s[0] * s[0] + s[3] * s[3] + s[5] * s[5] +
                         2.0 * (s[1] * s[1] + s[2] * s[2] + s[4] * s[4])));
    for (int c = 0; c < 6; ++c) tau.c[c][p] = -coef * mag * s[c];
  }
  return tau;
}

BoxTensor model_stress(SgsModel model, const BoxVelocity& vel,
                       const FilterParams& params, double cs) {
  switch (model) {
    case SgsModel::gradient:
      return box_gradient_stress(vel, params);
    case SgsModel::rles:
      return box_rles_stress(vel, params);
    case SgsModel::smagorinsky:
      return box_smagorinsky_stress(vel, params, cs);
    case SgsModel::none: {
      BoxTensor tau;
      tau.n = vel.n;
      for (auto& comp : tau.c)
        comp.assign(static_cast<std::size_t>(vel.n) * vel.n * vel.n, 0.0);
      return tau;
    }
  }
  throw internal_error("unhandled subgrid model in model_stress");
}

CorrelationReport correlation(const BoxTensor& exact, const BoxTensor& model) {
  if (exact.n != model.n)
    throw config_error("correlation: tensors live on different grids");
  const std::size_t np = exact.c[0].size();
  CorrelationReport rep;
  double pooled_xy = 0.0, pooled_xx = 0.0, pooled_yy = 0.0;
  for (int c = 0; c < 6; ++c) {
    const std::vector<double>& x = exact.c[c];
    const std::vector<double>& y = model.c[c];
    double mx = 0.0, my = 0.0;
    for (std::size_t p = 0; p < np; ++p) {
      mx += x[p];
      my += y[p];
    }
    mx /= np;
    my /= np;
    double sxx = 0.0, syy = 0.0, sxy = 0.0, scale = 0.0;
    for (std::size_t p = 0; p < np; ++p) {
      const double dx = x[p] - mx, dy = y[p] - my;
      sxx += dx * dx;
      syy += dy * dy;
      sxy += dx * dy;
      scale += x[p] * x[p] + y[p] * y[p];
    }
    const double floor = 1e-28 * (scale / np + 1e-300) * np;
    if (sxx <= floor || syy <= floor)
      throw stat_error(std::string("correlation undefined: component ") +
                       component_name(c) + " has zero variance");
    rep.component[c] = sxy / std::sqrt(sxx * syy);
    pooled_xy += sxy;
    pooled_xx += sxx;
    pooled_yy += syy;
  }
  rep.pooled = pooled_xy / std::sqrt(pooled_xx * pooled_yy);
  return rep;
}

double relative_tensor_error(const BoxTensor& a, const BoxTensor& b) {
  if (a.n != b.n)
    throw config_error("relative_tensor_error: tensors live on different grids");
  double num = 0.0, den = 0.0;
  for (int c = 0; c < 6; ++c)
    for (std::size_t p = 0; p < a.c[c].size(); ++p) {
      const double d = a.c[c][p] - b.c[c][p];
      num += d * d;
      den += b.c[c][p] * b.c[c][p];
    }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace rles
