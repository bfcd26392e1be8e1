#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pizza/germ/builder.hpp"
#include "pizza/oracle/oracle.hpp"

namespace pizza {

// Exit codes of run_command.
enum ExitCode { kExitOk = 0, kExitError = 2, kExitNotEquivalent = 3, kExitCheckFailed = 4 };

// Run settings. Flags win over the environment (PIZZA_PRECISION_BITS).
struct Config {
  int precision_bits = 4096;  // refinement budget of algebraic numbers; cap of oracle precision
  int max_depth = 64;
  double t0 = 1e-2, ratio = 0.8;
  int count = 24;
  double tolerance = 0.05;
  std::string output;  // empty: standard output

  // Throws InvalidArgument unless all bounds are positive and 0 < ratio < 1.
  void validate() const;
  ComputeOptions compute_options(bool minimal) const;
  OracleConfig oracle_config() const;
};

// argv without the program name, e.g. {"compute", "--minimal", "f.germ.json"}. Results go to `out`
// (or the output file); errors go to `err` as {"error":code,"detail":...}.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pizza
