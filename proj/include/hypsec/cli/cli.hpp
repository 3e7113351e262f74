#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace hypsec::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kInconsistent = 2 };

struct RunConfig {
  std::string command;  // classify | oracle | count | sweep | roundtrip
  std::optional<std::string> section;
  std::optional<std::string> hyperplane;  // eight rationals, comma separated
  std::string field = "Q";                // "Q" or a prime p >= 5
  int d_max = 5;
  std::optional<std::uint64_t> sample;
  bool exhaustive = false;
  std::uint64_t seed = 42;
  bool serial = false;
  std::string output = "text";  // text | json
  std::optional<std::string> out_path;
};

/// Executes one command, writing the report to `out` (or to the --out file)
/// and diagnostics to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv with CLI11 and runs the command.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypsec::cli
