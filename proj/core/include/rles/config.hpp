#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rles/solver.hpp"

namespace rles {

// Plain-text `key = value` configuration with dotted section prefixes
// (run.*, grid.*, sgs.*). '#' starts a comment; blank lines ignored.

// Raw key/value pairs plus the source line of each assignment (0 for values
// injected by presets or command-line flags).
struct ConfigSource {
  std::map<std::string, std::pair<std::string, int>> kv;
  void set(const std::string& key, const std::string& value, int line = 0);
};

// Parses a config file into raw pairs. Throws io_error when the file cannot
// be read and config_error on malformed lines (message cites the line).
ConfigSource read_config_file(const std::string& path);

// Same grammar from an in-memory string (used for the config echo embedded
// in checkpoints); `label` names the source in error messages.
ConfigSource parse_config_text(const std::string& text,
                               const std::string& label = "config text");

// Channel presets: "re180" (36x37x36, 4pi x 2 x 4pi/3, U_m 15.63, dt 2e-4,
// Re 180) and "re395" (72x55x54, 2pi x 2 x pi, U_m 17.54, dt 2.5e-4, Re 395).
// Throws config_error for any other name.
std::vector<std::pair<std::string, std::string>> preset_values(
    const std::string& name);

// Builds a validated RunConfig. Precedence, lowest to highest: preset,
// config file, overrides (command-line flags). Unknown keys raise
// config_error listing the valid keys; bad values cite their source line;
// missing required keys are named.
RunConfig make_run_config(const std::string& config_path,
                          const std::string& preset,
                          const std::vector<std::pair<std::string, std::string>>&
                              overrides);

// Same, from already-merged raw pairs.
RunConfig make_run_config(const ConfigSource& merged);

// Canonical echo of a resolved configuration: every key that affects
// results, one per line, sorted, full precision. Used for the manifest and
// embedded in checkpoints.
std::string resolved_config_text(const RunConfig& cfg);

// All recognized configuration keys, sorted.
std::vector<std::string> known_config_keys();

}  // namespace rles
