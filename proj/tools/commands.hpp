#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwkit/json_io.hpp"

namespace iwkit::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kPrecisionError = 3,
  kUndefined = 4,
  kMismatch = 5,
};

// A rendered report body in both formats, plus the exit code it implies.
struct Output {
  std::string csv;
  Json json;
  int exit_code = kOk;
};

Output run_wprep(const Json& input, const Config& cfg);
Output run_tower(const Json& input, const Config& cfg);
Output run_growth(const Json& input, const Config& cfg);

struct LogmatrixOptions {
  int n = 1;
  bool minors = false;
  std::optional<int> theta_level;
  std::optional<Json> col_values;
};
Output run_logmatrix(const Json& input, const Config& cfg, const LogmatrixOptions& opts);

// `values` are e_0..e_K, or ranks of E over the layers when from_ranks is set.
Output run_rksolve(const std::vector<long>& values, bool from_ranks, const Config& cfg);

}  // namespace iwkit::cli
