#include "rles/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "rles/errors.hpp"

namespace rles {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string source_label(int line) {
  return line > 0 ? "line " + std::to_string(line) : "command line/preset";
}

double parse_double(const std::string& key, const std::string& v, int line) {
  char* end = nullptr;
  const double x = std::strtod(v.c_str(), &end);
  if (end == v.c_str() || *end != '\0' || !std::isfinite(x))
    throw config_error("expected a number for " + key + ", got '" + v + "' (" +
                       source_label(line) + ")");
  return x;
}

std::int64_t parse_int(const std::string& key, const std::string& v, int line) {
  std::int64_t x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || p != v.data() + v.size())
    throw config_error("expected an integer for " + key + ", got '" + v +
                       "' (" + source_label(line) + ")");
  return x;
}

struct KeySpec {
  bool required;
  std::function<void(RunConfig&, const std::string&, int)> apply;
};

const std::map<std::string, KeySpec>& key_table() {
  static const std::map<std::string, KeySpec> table = {
      {"run.dt", {true, [](RunConfig& c, const std::string& v, int l) {
                    c.dt = parse_double("run.dt", v, l);
                  }}},
      {"run.n_steps", {true, [](RunConfig& c, const std::string& v, int l) {
                         c.n_steps = parse_int("run.n_steps", v, l);
                       }}},
      {"run.u_m", {true, [](RunConfig& c, const std::string& v, int l) {
                     c.u_m = parse_double("run.u_m", v, l);
                   }}},
      {"run.re", {true, [](RunConfig& c, const std::string& v, int l) {
                    c.re = parse_double("run.re", v, l);
                  }}},
      {"run.transient_steps",
       {false, [](RunConfig& c, const std::string& v, int l) {
          c.transient_steps = parse_int("run.transient_steps", v, l);
        }}},
      {"run.checkpoint_every",
       {false, [](RunConfig& c, const std::string& v, int l) {
          c.checkpoint_every = parse_int("run.checkpoint_every", v, l);
        }}},
      {"run.seed", {false, [](RunConfig& c, const std::string& v, int l) {
                      c.seed = static_cast<std::uint64_t>(
                          parse_int("run.seed", v, l));
                    }}},
      {"run.perturbation",
       {false, [](RunConfig& c, const std::string& v, int l) {
          c.perturbation = parse_double("run.perturbation", v, l);
        }}},
      {"run.stabilizer_alpha",
       {false, [](RunConfig& c, const std::string& v, int l) {
          c.stabilizer_alpha = parse_double("run.stabilizer_alpha", v, l);
        }}},
      {"grid.nx", {true, [](RunConfig& c, const std::string& v, int l) {
                     c.grid.nx = static_cast<int>(parse_int("grid.nx", v, l));
                   }}},
      {"grid.ny", {true, [](RunConfig& c, const std::string& v, int l) {
                     c.grid.ny = static_cast<int>(parse_int("grid.ny", v, l));
                   }}},
      {"grid.nz", {true, [](RunConfig& c, const std::string& v, int l) {
                     c.grid.nz = static_cast<int>(parse_int("grid.nz", v, l));
                   }}},
      {"grid.lx", {true, [](RunConfig& c, const std::string& v, int l) {
                     c.grid.lx = parse_double("grid.lx", v, l);
                   }}},
      {"grid.lz", {true, [](RunConfig& c, const std::string& v, int l) {
                     c.grid.lz = parse_double("grid.lz", v, l);
                   }}},
      {"grid.stretch_beta",
       {false, [](RunConfig& c, const std::string& v, int l) {
          c.grid.stretch_beta = parse_double("grid.stretch_beta", v, l);
        }}},
      {"sgs.model", {false, [](RunConfig& c, const std::string& v, int l) {
                       try {
                         c.sgs.model = sgs_model_from_string(v);
                       } catch (const config_error& e) {
                         throw config_error(std::string(e.what()) + " (" +
                                            source_label(l) + ")");
                       }
                     }}},
      {"sgs.cs", {false, [](RunConfig& c, const std::string& v, int l) {
                    c.sgs.cs = parse_double("sgs.cs", v, l);
                  }}},
      {"sgs.gamma", {false, [](RunConfig& c, const std::string& v, int l) {
                       c.sgs.filter.gamma = parse_double("sgs.gamma", v, l);
                     }}},
  };
  return table;
}

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void ConfigSource::set(const std::string& key, const std::string& value,
                       int line) {
  kv[key] = {value, line};
}

namespace {

ConfigSource parse_config_stream(std::istream& in, const std::string& label) {
  ConfigSource src;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const std::size_t eq = body.find('=');
    if (eq == std::string::npos)
      throw config_error("expected 'key = value' on line " +
                         std::to_string(lineno) + " of " + label);
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (key.empty() || value.empty())
      throw config_error("empty key or value on line " +
                         std::to_string(lineno) + " of " + label);
    src.set(key, value, lineno);
  }
  return src;
}

}  // namespace

ConfigSource read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open config file " + path);
  return parse_config_stream(in, path);
}

ConfigSource parse_config_text(const std::string& text,
                               const std::string& label) {
  std::istringstream in(text);
  return parse_config_stream(in, label);
}

std::vector<std::pair<std::string, std::string>> preset_values(
    const std::string& name) {
  using std::numbers::pi;
  if (name == "re180")
    return {{"grid.nx", "36"},
            {"grid.ny", "37"},
            {"grid.nz", "36"},
            {"grid.lx", format_full(4.0 * pi)},
            {"grid.lz", format_full(4.0 * pi / 3.0)},
            {"run.u_m", "15.63"},
            {"run.dt", "0.0002"},
            {"run.re", "180"}};
  if (name == "re395")
    return {{"grid.nx", "72"},
            {"grid.ny", "55"},
            {"grid.nz", "54"},
            {"grid.lx", format_full(2.0 * pi)},
            {"grid.lz", format_full(pi)},
            {"run.u_m", "17.54"},
            {"run.dt", "0.00025"},
            {"run.re", "395"}};
  throw config_error("unknown preset '" + name +
                     "' (valid presets: re180, re395)");
}

std::vector<std::string> known_config_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : key_table()) keys.push_back(k);
  return keys;
}

RunConfig make_run_config(
    const std::string& config_path, const std::string& preset,
    const std::vector<std::pair<std::string, std::string>>& overrides) {
  ConfigSource merged;
  if (!preset.empty())
    for (const auto& [k, v] : preset_values(preset)) merged.set(k, v);
  if (!config_path.empty()) {
    const ConfigSource file = read_config_file(config_path);
    for (const auto& [k, vl] : file.kv) merged.set(k, vl.first, vl.second);
  }
  for (const auto& [k, v] : overrides) merged.set(k, v);
  return make_run_config(merged);
}

RunConfig make_run_config(const ConfigSource& merged) {
  const auto& table = key_table();
  for (const auto& [k, vl] : merged.kv)
    if (!table.count(k)) {
      std::ostringstream msg;
      msg << "unknown config key '" << k << "' (" << source_label(vl.second)
          << "); valid keys:";
      for (const auto& valid : known_config_keys()) msg << ' ' << valid;
      throw config_error(msg.str());
    }

  RunConfig cfg;
  for (const auto& [k, spec] : table) {
    const auto it = merged.kv.find(k);
    if (it == merged.kv.end()) {
      if (spec.required)
        throw config_error("missing required config key " + k);
      continue;
    }
    spec.apply(cfg, it->second.first, it->second.second);
  }
  cfg.validate();
  return cfg;
}

std::string resolved_config_text(const RunConfig& cfg) {
  std::ostringstream out;
  out << "grid.lx = " << format_full(cfg.grid.lx) << '\n'
      << "grid.lz = " << format_full(cfg.grid.lz) << '\n'
      << "grid.nx = " << cfg.grid.nx << '\n'
      << "grid.ny = " << cfg.grid.ny << '\n'
      << "grid.nz = " << cfg.grid.nz << '\n'
      << "grid.stretch_beta = " << format_full(cfg.grid.stretch_beta) << '\n'
      << "run.checkpoint_every = " << cfg.checkpoint_every << '\n'
      << "run.dt = " << format_full(cfg.dt) << '\n'
      << "run.n_steps = " << cfg.n_steps << '\n'
      << "run.perturbation = " << format_full(cfg.perturbation) << '\n'
      << "run.re = " << format_full(cfg.re) << '\n'
      << "run.seed = " << cfg.seed << '\n'
      << "run.stabilizer_alpha = " << format_full(cfg.stabilizer_alpha) << '\n'
      << "run.transient_steps = " << cfg.transient_steps << '\n'
      << "run.u_m = " << format_full(cfg.u_m) << '\n'
      << "sgs.cs = " << format_full(cfg.sgs.cs) << '\n'
      << "sgs.gamma = " << format_full(cfg.sgs.filter.gamma) << '\n'
      << "sgs.model = " << to_string(cfg.sgs.model) << '\n';
  return out.str();
}

}  // namespace rles
