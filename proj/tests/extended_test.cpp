// Long-running physics validation: full channel runs at the two friction
// Reynolds numbers with every subgrid model. Hours of runtime; built only
// when RLES_EXTENDED_TESTS is enabled. Prints one "criterion N model M"
// line per sub-check; the exit code is the number of failures.
//
// The bundled mean-velocity reference (retau180_uplus.dat) is the Reichardt
// law-of-the-wall correlation, not DNS data. Point RLES_REFERENCE_UPLUS at a
// DNS profile (and RLES_REFERENCE_MAP at its column mapping, default
// "y:1,Uplus:2" with y+ in the first mapped column) for a sharper benchmark.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "rles/config.hpp"
#include "rles/errors.hpp"
#include "rles/reference.hpp"
#include "rles/run.hpp"
#include "rles/sgs.hpp"

using namespace rles;
namespace fs = std::filesystem;

#ifndef RLES_EXTENDED_DATA_DIR
#define RLES_EXTENDED_DATA_DIR "."
#endif

namespace {

const char* kModels[4] = {"none", "smagorinsky", "gradient", "rles"};

int check(bool ok, const std::string& label, const std::string& detail) {
  std::cout << label << ": " << (ok ? "PASS" : "FAIL");
  if (!ok) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  return ok ? 0 : 1;
}

// Friction-time span measured with the nominal u_tau ~= 1 of both presets.
std::int64_t steps_for(double friction_times, double dt) {
  return static_cast<std::int64_t>(std::ceil(friction_times / dt));
}

int run_retau180(const std::string& model, const fs::path& outdir) {
  RunConfig cfg = make_run_config("", "re180", {{"sgs.model", model}});
  cfg.transient_steps = steps_for(15.0, cfg.dt);
  cfg.n_steps = steps_for(5.0, cfg.dt);
  cfg.checkpoint_every = 25000;

  const RunResult res = run_simulation(cfg, (outdir / model).string());
  const ProfilesReport& rep = res.profiles;
  int failures = 0;

  const std::string label = "criterion 9 model " + model;
  failures += check(rep.shear_residual < 0.05, label + " shear-linearity",
                    "residual " + std::to_string(rep.shear_residual));
  failures += check(std::abs(rep.re_tau - 180.0) <= 0.02 * 180.0,
                    label + " friction-Reynolds",
                    "Re_tau " + std::to_string(rep.re_tau));

  std::string ref_path = fs::path(RLES_EXTENDED_DATA_DIR) / "retau180_uplus.dat";
  std::string mapping = "y:1,Uplus:2";
  if (const char* env = std::getenv("RLES_REFERENCE_UPLUS")) ref_path = env;
  if (const char* env = std::getenv("RLES_REFERENCE_MAP")) mapping = env;
  const ReferenceProfile ref = load_reference_profiles(ref_path, mapping);

  // Restrict the comparison to 5 <= y+ <= 150.
  std::vector<double> yp, up;
  for (std::size_t j = 0; j < rep.y_plus.size(); ++j)
    if (rep.y_plus[j] >= 5.0 && rep.y_plus[j] <= 150.0) {
      yp.push_back(rep.y_plus[j]);
      up.push_back(rep.u_plus[j]);
    }
  const ComparisonReport cmp = compare_profiles(yp, up, ref, "Uplus");
  write_comparison_csv(cmp, (outdir / model / "uplus_vs_reference.csv").string());
  failures += check(cmp.rel_linf <= 0.07, label + " mean-velocity",
                    "rel Linf " + std::to_string(cmp.rel_linf) + " vs " +
                        ref.source);
  return failures;
}

int run_retau395(const std::string& model, const fs::path& outdir) {
  RunConfig cfg = make_run_config("", "re395", {{"sgs.model", model}});
  cfg.transient_steps = 0;
  cfg.n_steps = steps_for(1.0, cfg.dt);

  const std::string label = "criterion 10 model " + model;
  try {
    const RunResult res = run_simulation(cfg, (outdir / model).string());
    return check(res.final_step == static_cast<std::uint64_t>(cfg.n_steps),
                 label, "stopped early at step " +
                            std::to_string(res.final_step));
  } catch (const divergence_error& e) {
    return check(false, label, e.what());
  }
}

}  // namespace

int main() {
  const fs::path base = fs::current_path() / "extended_runs";
  int failures = 0;
  for (const char* model : kModels)
    failures += run_retau180(model, base / "retau180");
  for (const char* model : kModels)
    failures += run_retau395(model, base / "retau395");
  return failures;
}
