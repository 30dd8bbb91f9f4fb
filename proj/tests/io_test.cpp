#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rles/checkpoint.hpp"
#include "rles/config.hpp"
#include "rles/errors.hpp"
#include "rles/reference.hpp"
#include "rles/run.hpp"
#include "rles/solver.hpp"
#include "test_util.hpp"

using namespace rles;
namespace fs = std::filesystem;

namespace {

bool same_bits(std::span<const double> a, std::span<const double> b) {
  return std::ranges::equal(a, b);
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("rles_io_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const {
    return (path / name).string();
  }
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

RunConfig tiny_config() {
  ConfigSource src;
  src.set("run.dt", "1e-3");
  src.set("run.n_steps", "5");
  src.set("run.u_m", "1.0");
  src.set("run.re", "100");
  src.set("run.perturbation", "0.05");
  src.set("grid.nx", "16");
  src.set("grid.ny", "17");
  src.set("grid.nz", "16");
  src.set("grid.lx", "6.283185307179586");
  src.set("grid.lz", "6.283185307179586");
  src.set("sgs.model", "gradient");
  return make_run_config(src);
}

}  // namespace

TEST_CASE("configuration parsing and merging") {
  SUBCASE("preset supplies a complete run") {
    const RunConfig cfg = make_run_config("", "re180", {{"run.n_steps", "10"}});
    CHECK(cfg.grid.nx == 36);
    CHECK(cfg.grid.ny == 37);
    CHECK(cfg.grid.nz == 36);
    CHECK(cfg.u_m == doctest::Approx(15.63));
    CHECK(cfg.re == doctest::Approx(180.0));
    CHECK(cfg.dt == doctest::Approx(2e-4));
    CHECK(cfg.grid.lx == doctest::Approx(4.0 * 3.141592653589793));
    CHECK(cfg.grid.lz == doctest::Approx(4.0 * 3.141592653589793 / 3.0));
  }

  SUBCASE("unknown preset") {
    CHECK_THROWS_WITH_AS((void)make_run_config("", "re720", {{"run.n_steps", "10"}}),
                         doctest::Contains("re720"), config_error);
  }

  SUBCASE("file overrides preset, flags override file") {
    TempDir dir("cfg_precedence");
    write_text(dir.file("run.cfg"),
               "# comment\n"
               "run.dt = 1e-3\n"
               "run.n_steps = 42\n");
    const RunConfig from_file = make_run_config(dir.file("run.cfg"), "re180", {});
    CHECK(from_file.dt == doctest::Approx(1e-3));
    CHECK(from_file.n_steps == 42);
    const RunConfig from_flag = make_run_config(
        dir.file("run.cfg"), "re180", {{"run.dt", "5e-4"}});
    CHECK(from_flag.dt == doctest::Approx(5e-4));
    CHECK(from_flag.n_steps == 42);
  }

  SUBCASE("missing required key is named") {
    ConfigSource src;
    for (const auto& [key, value] : preset_values("re180"))
      if (key != "run.dt") src.set(key, value);
    src.set("run.n_steps", "5");
    CHECK_THROWS_WITH_AS((void)make_run_config(src),
                         doctest::Contains("run.dt"), config_error);
  }

  SUBCASE("unknown key lists the valid keys") {
    TempDir dir("cfg_unknown");
    write_text(dir.file("run.cfg"), "run.dtt = 1e-3\n");
    try {
      (void)make_run_config(dir.file("run.cfg"), "re180", {});
      FAIL("expected config_error");
    } catch (const config_error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("run.dtt") != std::string::npos);
      CHECK(msg.find("run.dt") != std::string::npos);
      CHECK(msg.find("grid.nx") != std::string::npos);
    }
  }

  SUBCASE("type errors cite the source line") {
    TempDir dir("cfg_type");
    write_text(dir.file("run.cfg"),
               "run.n_steps = 10\n"
               "\n"
               "run.dt = fast\n");
    try {
      (void)make_run_config(dir.file("run.cfg"), "re180", {});
      FAIL("expected config_error");
    } catch (const config_error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("run.dt") != std::string::npos);
      CHECK(msg.find("3") != std::string::npos);
    }
  }

  SUBCASE("malformed line is rejected") {
    TempDir dir("cfg_malformed");
    write_text(dir.file("run.cfg"), "run.dt 1e-3\n");
    CHECK_THROWS_AS((void)read_config_file(dir.file("run.cfg")), config_error);
  }

  SUBCASE("resolved echo reparses to the identical configuration") {
    const RunConfig cfg = make_run_config(
        "", "re180", {{"run.n_steps", "10"}, {"sgs.model", "rles"}});
    const std::string echo = resolved_config_text(cfg);
    const RunConfig again = make_run_config(parse_config_text(echo, "echo"));
    CHECK(resolved_config_text(again) == echo);
    CHECK(again.sgs.model == SgsModel::rles);
  }
}

TEST_CASE("checkpoint round trip") {
  const GridConfig gc = testutil::small_grid(16, 17, 16);
  const auto g = build_grid(gc);
  SolverState state(*g);
  testutil::fill_random(state.vel.u, 1);
  testutil::fill_random(state.vel.v, 2);
  testutil::fill_random(state.vel.w, 3);
  state.step = 123;
  state.t = 0.456;
  state.dpdx = -0.007;
  state.has_history = true;
  state.conv_prev.u = state.vel.u;
  state.conv_prev.v = state.vel.v;
  state.conv_prev.w = state.vel.w;
  testutil::fill_random(state.conv_prev.u, 4);

  TempDir dir("ckpt");
  const std::string path = dir.file("state.bin");
  write_checkpoint(path, state, gc, "run.dt = 1e-3\n");

  SUBCASE("bitwise restore") {
    const Checkpoint ck = read_checkpoint(path);
    CHECK(ck.step == 123);
    CHECK(ck.t == 0.456);
    CHECK(ck.dpdx == -0.007);
    CHECK(ck.config_text == "run.dt = 1e-3\n");
    CHECK(ck.grid.nx == 16);
    SolverState restored(*g);
    restore_state(ck, restored);
    CHECK(same_bits(restored.vel.u.phys(), state.vel.u.phys()));
    CHECK(same_bits(restored.vel.v.phys(), state.vel.v.phys()));
    CHECK(same_bits(restored.vel.w.phys(), state.vel.w.phys()));
    CHECK(same_bits(restored.conv_prev.u.phys(), state.conv_prev.u.phys()));
    CHECK(restored.has_history);
    CHECK(restored.dpdx == state.dpdx);
  }

  SUBCASE("corruption is detected") {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(200);
    char byte = 0;
    f.seekg(200);
    f.read(&byte, 1);
    byte ^= 0x40;
    f.seekp(200);
    f.write(&byte, 1);
    f.close();
    CHECK_THROWS_AS((void)read_checkpoint(path), io_error);
  }

  SUBCASE("truncation is detected") {
    const auto size = fs::file_size(path);
    fs::resize_file(path, size - 16);
    CHECK_THROWS_AS((void)read_checkpoint(path), io_error);
  }

  SUBCASE("bad magic is detected") {
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.write("NOTACKPT", 8);
    f.close();
    CHECK_THROWS_AS((void)read_checkpoint(path), io_error);
  }

  SUBCASE("grid mismatch on restore") {
    const Checkpoint ck = read_checkpoint(path);
    const auto g2 = build_grid(testutil::small_grid(16, 33, 16));
    SolverState other(*g2);
    CHECK_THROWS_AS(restore_state(ck, other), config_error);
  }

  SUBCASE("missing file") {
    CHECK_THROWS_AS((void)read_checkpoint(dir.file("absent.bin")), io_error);
  }
}

TEST_CASE("run artifacts") {
  TempDir dir("run");
  RunConfig cfg = tiny_config();
  cfg.n_steps = 10;
  const RunResult res = run_simulation(cfg, dir.file("out"));
  CHECK(res.final_step == 10);
  CHECK(res.final_time == doctest::Approx(10 * cfg.dt));
  for (const char* name : {"config.resolved", "profiles.csv",
                           "shear_balance.csv", "manifest.txt",
                           "checkpoint.bin"})
    CHECK_MESSAGE(fs::exists(fs::path(dir.file("out")) / name), name);

  // The manifest is line-oriented `key = value`.
  std::ifstream manifest(dir.file("out") + "/manifest.txt");
  std::map<std::string, std::string> entries;
  std::string line;
  while (std::getline(manifest, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    key.erase(key.find_last_not_of(' ') + 1);
    entries[key] = line.substr(eq + 1);
  }
  CHECK(entries.count("final_step"));
  CHECK(entries.count("u_tau"));
  CHECK(entries.count("re_tau"));
  CHECK(entries.count("config.run.dt"));
}

TEST_CASE("an interrupted run continues exactly") {
  TempDir dir("restart");
  RunConfig cfg = tiny_config();
  cfg.n_steps = 8;
  cfg.checkpoint_every = 4;
  const RunResult full = run_simulation(cfg, dir.file("full"));

  // Re-run only the first half, then resume for the remaining steps.
  RunConfig half = cfg;
  half.n_steps = 4;
  (void)run_simulation(half, dir.file("half"));
  const RunResult resumed =
      resume_run(dir.file("half") + "/checkpoint.bin", 4, dir.file("resumed"));
  CHECK(resumed.final_step == 8);

  const Checkpoint a = read_checkpoint(dir.file("full") + "/checkpoint.bin");
  const Checkpoint b = read_checkpoint(dir.file("resumed") + "/checkpoint.bin");
  CHECK(a.step == b.step);
  CHECK(a.t == b.t);
  CHECK(a.dpdx == b.dpdx);
  CHECK(a.u == b.u);
  CHECK(a.v == b.v);
  CHECK(a.w == b.w);
  CHECK(a.hu == b.hu);
  CHECK(a.hv == b.hv);
  CHECK(a.hw == b.hw);
}

TEST_CASE("reference profile ingestion") {
  TempDir dir("ref");

  SUBCASE("loads mapped columns") {
    write_text(dir.file("dns.dat"),
               "% y  y+  Umean  Uplus\n"
               "  -1.0  0.0   0.0  0.0\n"
               "  -0.9  18.0  9.0  9.1\n"
               "  -0.5  90.0  15.0 15.2\n");
    const ReferenceProfile ref =
        load_reference_profiles(dir.file("dns.dat"), "y:1,Uplus:4");
    REQUIRE(ref.y.size() == 3);
    CHECK(ref.y[1] == doctest::Approx(-0.9));
    CHECK(ref.columns.at("Uplus")[2] == doctest::Approx(15.2));
  }

  SUBCASE("comments-only file is an error") {
    write_text(dir.file("empty.dat"), "% header\n# another\n\n");
    CHECK_THROWS_WITH_AS(
        (void)load_reference_profiles(dir.file("empty.dat"), "y:1"),
        doctest::Contains("no data rows"), io_error);
  }

  SUBCASE("column-count mismatch cites the line") {
    write_text(dir.file("ragged.dat"),
               "% header\n"
               "1 2 3\n1 2 3\n1 2 3\n1 2 3\n1 2 3\n"
               "1 2\n");
    CHECK_THROWS_WITH_AS(
        (void)load_reference_profiles(dir.file("ragged.dat"), "y:1,q:3"),
        doctest::Contains("7"), io_error);
  }

  SUBCASE("non-numeric cell cites line and column") {
    write_text(dir.file("text.dat"), "1.0 2.0\n1.5 oops\n");
    try {
      (void)load_reference_profiles(dir.file("text.dat"), "y:1,q:2");
      FAIL("expected io_error");
    } catch (const io_error& e) {
      const std::string msg = e.what();
      CHECK(msg.find("2") != std::string::npos);  // line and column are both 2
    }
  }

  SUBCASE("mapping must bind y") {
    write_text(dir.file("ok.dat"), "1.0 2.0\n");
    CHECK_THROWS_AS(
        (void)load_reference_profiles(dir.file("ok.dat"), "q:2"),
        config_error);
  }
}

TEST_CASE("profile comparison") {
  ReferenceProfile ref;
  ref.source = "synthetic";
  for (int i = 0; i <= 10; ++i) {
    ref.y.push_back(0.1 * i);
    ref.columns["q"].push_back(2.0 + 0.5 * (0.1 * i));
  }

  SUBCASE("identical data has zero error") {
    const ComparisonReport rep =
        compare_profiles(ref.y, ref.columns["q"], ref, "q");
    CHECK(rep.rel_l2 < 1e-14);
    CHECK(rep.rel_linf < 1e-14);
  }

  SUBCASE("uniform 10 percent inflation") {
    std::vector<double> run = ref.columns["q"];
    for (double& v : run) v *= 1.10;
    const ComparisonReport rep = compare_profiles(ref.y, run, ref, "q");
    CHECK(rep.rel_linf == doctest::Approx(0.10).epsilon(1e-12));
    CHECK(rep.rel_l2 == doctest::Approx(0.10).epsilon(1e-12));
  }

  SUBCASE("linear reference interpolates exactly onto off-grid points") {
    std::vector<double> y_run, q_run;
    for (int i = 0; i < 7; ++i) {
      const double y = 0.05 + 0.13 * i;
      y_run.push_back(y);
      q_run.push_back(2.0 + 0.5 * y);
    }
    const ComparisonReport rep = compare_profiles(y_run, q_run, ref, "q");
    CHECK(rep.rel_linf < 1e-13);
  }

  SUBCASE("missing quantity and empty overlap are errors") {
    CHECK_THROWS_AS((void)compare_profiles(ref.y, ref.columns["q"], ref, "w"),
                    config_error);
    const std::vector<double> far_y = {5.0, 6.0};
    const std::vector<double> far_q = {1.0, 2.0};
    CHECK_THROWS_AS((void)compare_profiles(far_y, far_q, ref, "q"),
                    config_error);
  }
}
