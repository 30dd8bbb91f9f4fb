#pragma once

#include <map>
#include <string>
#include <vector>

namespace rles {

// External benchmark profile (e.g. published DNS data). The y column may be
// either y or y+ depending on the source; quantity names are free-form
// (conventionally Uplus, uvplus, urms, vrms, wrms).
struct ReferenceProfile {
  std::string source;
  std::vector<double> y;
  std::map<std::string, std::vector<double>> columns;
};

// Reads whitespace-separated numeric columns; lines starting with '%' or '#'
// (after leading blanks) are skipped. `mapping` binds names to 1-based
// column indices, e.g. "y:1,Uplus:3"; the y column is required. Errors cite
// line and column; an all-comment file is an error.
ReferenceProfile load_reference_profiles(const std::string& path,
                                         const std::string& mapping);

struct ComparisonReport {
  std::string quantity;
  // Run points inside the reference's y range, with the reference linearly
  // interpolated onto them.
  std::vector<double> y, run_value, ref_value;
  double rel_l2 = 0.0;
  double rel_linf = 0.0;
};

// Compares a run profile (y_run, q_run) against the named reference column
// over the overlap of the y ranges. Relative norms are scaled by the
// reference's norms. Throws config_error when the quantity is missing or the
// ranges do not overlap.
ComparisonReport compare_profiles(const std::vector<double>& y_run,
                                  const std::vector<double>& q_run,
                                  const ReferenceProfile& ref,
                                  const std::string& quantity);

// Side-by-side CSV: y,run,reference.
void write_comparison_csv(const ComparisonReport& rep, const std::string& path);

}  // namespace rles
