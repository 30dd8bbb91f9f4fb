#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rles/solver.hpp"

namespace rles {

// Binary checkpoint, version 1. Layout (all multi-byte values little-endian):
//   magic "RLESCKPT" (8 bytes)
//   payload:
//     u32 format version
//     f64 lx, f64 lz, i32 nx, i32 ny, i32 nz, f64 stretch_beta
//     u64 config-text length, bytes (resolved run configuration echo)
//     u64 step, f64 time, f64 dpdx, u8 has_history
//     u, v, w as f64 arrays (physical space, y-fastest pencils)
//     previous explicit-term arrays (same shape) when has_history
//   u32 CRC-32 of the payload
// Velocity is stored in physical space, which is the solver's between-step
// representation, so a restart reproduces an uninterrupted run bitwise.
struct Checkpoint {
  std::uint32_t version = 1;
  GridConfig grid;
  std::string config_text;
  std::uint64_t step = 0;
  double t = 0.0;
  double dpdx = 0.0;
  bool has_history = false;
  std::vector<double> u, v, w;
  std::vector<double> hu, hv, hw;
};

void write_checkpoint(const std::string& path, const SolverState& state,
                      const GridConfig& grid, const std::string& config_text);

// Throws io_error on missing/truncated files, bad magic, unsupported
// version, or CRC mismatch.
Checkpoint read_checkpoint(const std::string& path);

// Copies checkpoint arrays into a state on a matching grid; throws
// config_error when the grid shapes differ.
void restore_state(const Checkpoint& ck, SolverState& state);

}  // namespace rles
