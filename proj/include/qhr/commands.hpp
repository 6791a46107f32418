#pragma once

#include <optional>
#include <string>

#include "qhr/config.hpp"

namespace qhr {

struct CliOptions {
  std::optional<int> max_degree;
  std::optional<std::string> weights;  // "auto" or "a,b;c,d" sector list
  std::optional<std::string> format;   // text | json, overrides config
  std::string out_path;                // empty writes to stdout
  int jobs = 1;
};

// Each command returns the process exit code:
// 0 success, 1 verification mismatch, 2 validation failure,
// 3 parse/config error. Exceptions are mapped by run_command.
int cmd_validate(const RunConfig& cfg, const CliOptions& opts);
int cmd_flatness(const RunConfig& cfg, const CliOptions& opts);
int cmd_brst(const RunConfig& cfg, const CliOptions& opts);
int cmd_oracle(const RunConfig& cfg, const CliOptions& opts);
int cmd_predict(const RunConfig& cfg, const CliOptions& opts);
int cmd_verify(const RunConfig& cfg, const CliOptions& opts);

// Loads the config, dispatches, and maps exceptions to exit codes.
int run_command(const std::string& command, const std::string& config_path,
                const CliOptions& opts);

}  // namespace qhr
