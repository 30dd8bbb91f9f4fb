// Command-line front end: channel runs, restarts, synthetic-field model
// verification, filter transfer curves, and comparison against reference
// profiles.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "rles/apriori.hpp"
#include "rles/config.hpp"
#include "rles/errors.hpp"
#include "rles/filters.hpp"
#include "rles/reference.hpp"
#include "rles/run.hpp"

namespace {

using namespace rles;

std::vector<std::pair<std::string, std::string>> split_overrides(
    const std::vector<std::string>& sets) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& s : sets) {
    const std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw config_error("--set expects key=value, got '" + s + "'");
    out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
  }
  return out;
}

void print_run_summary(const RunResult& res) {
  std::cout << "run finished: step " << res.final_step << ", t = "
            << res.final_time << ", wall " << res.wall_seconds << " s\n";
  if (res.profiles.u_tau > 0.0)
    std::cout << "  u_tau = " << res.profiles.u_tau
              << ", Re_tau = " << res.profiles.re_tau
              << ", shear residual = " << res.profiles.shear_residual << '\n';
  std::cout << "  artifacts in " << res.output_dir << '\n';
}

int cmd_run(const std::string& config, const std::string& preset,
            const std::string& model, const std::string& output,
            const std::vector<std::string>& sets) {
  auto overrides = split_overrides(sets);
  if (!model.empty()) overrides.emplace_back("sgs.model", model);
  const RunConfig cfg = make_run_config(config, preset, overrides);
  print_run_summary(run_simulation(cfg, output));
  return 0;
}

int cmd_restart(const std::string& checkpoint, std::int64_t steps,
                const std::string& output) {
  print_run_summary(resume_run(checkpoint, steps, output));
  return 0;
}

int cmd_apriori(int n, double delta_over_h, const std::string& model,
                std::uint64_t seed, const std::string& output) {
  namespace fs = std::filesystem;
  fs::create_directories(output);
  const SgsModel m = sgs_model_from_string(model);
  const double h = 2.0 * std::numbers::pi / n;

  const BoxVelocity vel = synthesize_field(n, -5.0 / 3.0, seed);

  FilterParams params;
  params.delta = delta_over_h * h;
  const BoxTensor exact = exact_subfilter_stress(vel, params);
  const BoxTensor pred = model_stress(m, vel, params);
  const CorrelationReport rep = correlation(exact, pred);

  static const char* comp_names[6] = {"11", "12", "13", "22", "23", "33"};
  {
    std::ofstream out(fs::path(output) / "correlations.csv");
    out << "component,correlation\n";
    for (int c = 0; c < 6; ++c)
      out << comp_names[c] << ',' << rep.component[c] << '\n';
    out << "pooled," << rep.pooled << '\n';
  }
  std::cout << "model " << model << ", N = " << n << ", delta = "
            << delta_over_h << " h: pooled correlation " << rep.pooled << '\n';

  // Filter-width convergence of the model against the exact stress.
  {
    std::ofstream out(fs::path(output) / "convergence.csv");
    out << "delta_over_h,rel_error,observed_order\n";
    double prev_err = 0.0, prev_d = 0.0;
    for (double d = delta_over_h; d >= delta_over_h / 8.0 - 1e-12; d /= 2.0) {
      FilterParams p;
      p.delta = d * h;
      const double err = relative_tensor_error(
          model_stress(m, vel, p), exact_subfilter_stress(vel, p));
      out << d << ',' << err;
      if (prev_d > 0.0)
        out << ',' << std::log2(prev_err / err);
      out << '\n';
      prev_err = err;
      prev_d = d;
    }
  }
  std::cout << "  wrote correlations.csv and convergence.csv to " << output
            << '\n';
  return 0;
}

int cmd_transfer(double delta, double gamma, double kmax, int points,
                 const std::string& output) {
  std::ofstream out(output);
  if (!out) throw io_error("cannot open " + output + " for writing");
  FilterParams p;
  p.delta = delta;
  p.gamma = gamma;
  out << "k,x,gaussian,taylor,pade\n";
  out.precision(12);
  for (int i = 0; i <= points; ++i) {
    const double k = kmax * i / points;
    const double k2 = k * k;
    out << k << ',' << delta * delta * k2 / (4.0 * gamma) << ','
        << transfer_function(FilterKind::gaussian, k2, p) << ','
        << transfer_function(FilterKind::taylor, k2, p) << ','
        << transfer_function(FilterKind::pade, k2, p) << '\n';
  }
  std::cout << "wrote " << points + 1 << " transfer samples to " << output
            << '\n';
  return 0;
}

// Reads two named columns of the run's profiles.csv.
void load_run_profile(const std::string& dir, const std::string& quantity,
                      std::vector<double>& y_plus, std::vector<double>& q) {
  static const std::map<std::string, std::string> column_of = {
      {"Uplus", "U_plus"},   {"uvplus", "uv_plus"}, {"urms", "urms_plus"},
      {"vrms", "vrms_plus"}, {"wrms", "wrms_plus"},
  };
  const auto it = column_of.find(quantity);
  if (it == column_of.end()) {
    std::string valid;
    for (const auto& [k, _] : column_of) valid += ' ' + k;
    throw config_error("unknown quantity '" + quantity + "' (valid:" + valid +
                       ")");
  }
  const std::string path = dir + "/profiles.csv";
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw io_error(path + " is empty");
  std::vector<std::string> header;
  {
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) header.push_back(cell);
  }
  int yp_col = -1, q_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "y_plus") yp_col = static_cast<int>(c);
    if (header[c] == it->second) q_col = static_cast<int>(c);
  }
  if (yp_col < 0 || q_col < 0)
    throw io_error(path + " lacks column y_plus or " + it->second);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    y_plus.push_back(row[yp_col]);
    q.push_back(row[q_col]);
  }
  // profiles.csv runs from the wall up; keep y increasing for interpolation.
  if (y_plus.size() > 1 && y_plus.front() > y_plus.back()) {
    std::reverse(y_plus.begin(), y_plus.end());
    std::reverse(q.begin(), q.end());
  }
}

int cmd_compare(const std::string& run_dir, const std::string& ref_file,
                const std::string& map, const std::string& quantity,
                const std::string& output) {
  std::vector<double> y_plus, q;
  load_run_profile(run_dir, quantity, y_plus, q);
  const ReferenceProfile ref = load_reference_profiles(ref_file, map);
  const ComparisonReport rep = compare_profiles(y_plus, q, ref, quantity);
  std::cout << quantity << ": rel L2 = " << rep.rel_l2 << ", rel Linf = "
            << rep.rel_linf << " over " << rep.y.size() << " points\n";
  if (!output.empty()) {
    write_comparison_csv(rep, output);
    std::cout << "wrote side-by-side profile to " << output << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Channel-flow large-eddy simulation toolkit"};
  app.require_subcommand(1);

  // run
  std::string config, preset, model, output = "out";
  std::vector<std::string> sets;
  auto* run = app.add_subcommand("run", "Run a channel simulation");
  run->add_option("--config", config, "Configuration file (key = value)");
  run->add_option("--preset", preset, "Named configuration: re180 or re395");
  run->add_option("--model", model,
                  "Subgrid model: none, smagorinsky, gradient, rles");
  run->add_option("--output", output, "Artifacts directory");
  run->add_option("--set", sets, "Extra overrides, key=value");

  // restart
  std::string checkpoint;
  std::int64_t steps = 0;
  std::string restart_output = "out_restart";
  auto* restart = app.add_subcommand("restart", "Continue from a checkpoint");
  restart->add_option("--checkpoint", checkpoint, "Checkpoint file")
      ->required();
  restart->add_option("--steps", steps, "Additional steps")->required();
  restart->add_option("--output", restart_output, "Artifacts directory");

  // apriori
  int n = 32;
  double delta_over_h = 4.0;
  std::string ap_model = "gradient";
  std::uint64_t seed = 1;
  std::string ap_output = "apriori_out";
  auto* ap = app.add_subcommand(
      "apriori", "Verify a model against the exact subfilter stress of a "
                 "synthetic periodic-box field");
  ap->add_option("--n", n, "Box resolution (power of two >= 16)");
  ap->add_option("--delta-over-h", delta_over_h, "Filter width / grid spacing");
  ap->add_option("--model", ap_model, "Subgrid model");
  ap->add_option("--seed", seed, "Random seed");
  ap->add_option("--output", ap_output, "Artifacts directory");

  // transfer-curves
  double delta = 1.0, gamma = 6.0, kmax = 16.0;
  int points = 128;
  std::string tc_output = "transfer_curves.csv";
  auto* tc = app.add_subcommand("transfer-curves",
                                "Tabulate filter transfer functions");
  tc->add_option("--delta", delta, "Filter width");
  tc->add_option("--gamma", gamma, "Filter shape parameter");
  tc->add_option("--kmax", kmax, "Largest wavenumber");
  tc->add_option("--points", points, "Number of intervals");
  tc->add_option("--output", tc_output, "Output CSV");

  // compare
  std::string run_dir, ref_file, map, quantity = "Uplus", cmp_output;
  auto* cmp = app.add_subcommand("compare",
                                 "Compare run profiles with reference data");
  cmp->add_option("--run", run_dir, "Run artifacts directory")->required();
  cmp->add_option("--ref", ref_file, "Reference profile file")->required();
  cmp->add_option("--map", map, "Column mapping, e.g. y:2,Uplus:3")
      ->required();
  cmp->add_option("--quantity", quantity,
                  "Uplus, uvplus, urms, vrms or wrms");
  cmp->add_option("--output", cmp_output, "Side-by-side CSV");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config, preset, model, output, sets);
    if (restart->parsed()) return cmd_restart(checkpoint, steps, restart_output);
    if (ap->parsed()) return cmd_apriori(n, delta_over_h, ap_model, seed, ap_output);
    if (tc->parsed()) return cmd_transfer(delta, gamma, kmax, points, tc_output);
    if (cmp->parsed())
      return cmd_compare(run_dir, ref_file, map, quantity, cmp_output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
