#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ratvar/json_io.hpp"

namespace ratvar::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kSearchFailure = 2, kConvergenceFailure = 3 };

struct RunConfig {
  std::string command;
  std::string input;  // path or "-" for stdin
  std::string out;    // output path (prefix for lemniscate); empty means stdout
  double tol = 1e-10;
  unsigned seed = 7;
  std::optional<std::array<double, 4>> window;  // xmin, xmax, ymin, ymax
  std::size_t resolution = 401;
  std::size_t max_order = 200;

  // lemniscate
  std::vector<double> levels;
  // separate
  std::string mode = "segments";
  std::optional<double> angle;
  std::optional<double> level;
  std::size_t dp = 4, dq = 3;
};

// Validates the numeric knobs; throws InputError.
void check_config(const RunConfig& config);

Json cmd_lemniscate(const RunConfig& config, const Json& input);
// Sets `met` to whether the requested target (if any) was reached.
Json cmd_separate(const RunConfig& config, const Json& input, bool& met);
Json cmd_represent(const RunConfig& config, const Json& input);
Json cmd_funmat(const RunConfig& config, const Json& input);
Json cmd_sylvester(const RunConfig& config, const Json& input);
Json cmd_kspectral(const RunConfig& config, const Json& input);
Json cmd_algebra_check(const RunConfig& config, const Json& input);

// Runs one command, writing JSON to `out` (or config.out) and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line entry point.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ratvar::cli
