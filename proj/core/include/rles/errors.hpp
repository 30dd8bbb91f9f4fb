#pragma once

#include <stdexcept>
#include <string>

namespace rles {

// Invalid or inconsistent user configuration (bad grid sizes, unknown keys, ...).
struct config_error : std::runtime_error {
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A field was handed to an operator in the wrong representation.
struct representation_error : std::logic_error {
  explicit representation_error(const std::string& msg) : std::logic_error(msg) {}
};

// The time integration produced NaN/Inf.
struct divergence_error : std::runtime_error {
  explicit divergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Linear-algebra backends reported a singular system where none should occur.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

// A requested statistical quantity is undefined on the given data
// (e.g. correlation of a constant field).
struct stat_error : std::runtime_error {
  explicit stat_error(const std::string& msg) : std::runtime_error(msg) {}
};

// File parsing / IO failures (checkpoints, reference profiles, configs).
struct io_error : std::runtime_error {
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rles
