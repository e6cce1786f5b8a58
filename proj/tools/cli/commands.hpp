#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "balancegate/lfsr.hpp"
#include "balancegate/minterm_engine.hpp"

namespace balancegate::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitInvalid = 2,
  kExitReject = 3,
  kExitResource = 4,
  kExitMismatch = 5,
};

struct CommandOptions {
  bool json = false;
  bool dump = false;
  bool full_period = false;
  bool trust_poly = false;
  std::optional<std::uint64_t> steps;
  std::optional<std::string> tolerance;  // overrides the spec file
  std::size_t max_h_entries = kDefaultMaxHEntries;
  std::uint64_t max_period = kDefaultMaxPeriod;
};

// Each command returns its exit code and never throws library errors.
int cmd_analyze(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_expand(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_simulate(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);
int cmd_check_rules(const std::string& path, const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Full command line: `balancegate <command> <spec-file> [flags]`.
/// BALANCEGATE_MAX_PERIOD in the environment overrides the simulation budget.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace balancegate::cli
