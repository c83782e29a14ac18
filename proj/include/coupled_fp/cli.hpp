#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace coupled_fp::cli {

struct RunConfig {
  std::string command;  ///< solve | verify | delta-curve | uniqueness | audit-space
  std::string problem;
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  std::vector<double> eps_grid{0.1, 1.0, 10.0};
  std::string output;  ///< empty: stdout
  std::string format;  ///< csv | json; empty picks the command default
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

/// Parses argv. Returns the config, or an exit code when parsing ended the run
/// (--help, bad flags).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one command. Verdicts never change the exit code: 0 when the run
/// completed, 2 on input errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace coupled_fp::cli
