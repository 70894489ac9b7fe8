#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "padicft/integer.hpp"

namespace padicft::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,  // a verification failed or a witness was inconsistent
  kUsage = 2,
  kNotAttainable = 3,
  kBudgetExceeded = 4,
};

struct RunConfig {
  std::string command;
  long p = 2;
  std::optional<int> r;
  std::optional<int> r_max;
  std::optional<Rational> e;
  Rational delta{1, 2};
  std::string suite = "all";
  std::string format = "json";
  std::string out_path;  // empty: stdout
};

// Exact work grows like d^2 * (ring degree)^2 with d = p^(2r).
inline constexpr long kMaxGammaDimension = 256;
inline constexpr long kMaxVerifyDimension = 81;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// suite is one of identities, matrices, valuations, fourier, all.
std::vector<CheckResult> run_suite(const std::string& suite, long p, int r);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_gamma(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_witness(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; reports are written to --out or to out.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padicft::cli
