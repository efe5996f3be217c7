#pragma once

#include "tzhu_cli/report.hpp"

#include <optional>
#include <string>

namespace tzhu::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kConfigError = 2, kCutoffExceeded = 3, kInsufficientDepth = 4 };

struct RunConfig {
  std::string command;
  std::string model = "heisenberg";
  std::string twist = "identity";
  std::string c = "1/2";
  int cutoff = 6;
  int margin = 3;
  std::string depth = "2";
  std::optional<std::string> lowest_weight;
  std::string out;  // empty: stdout
  // Which sizing flags were given explicitly (verify uses its own defaults otherwise).
  bool cutoff_set = false, margin_set = false, depth_set = false, twist_set = false;
};

struct RunResult {
  Json document;
  int exit_code = kOk;
};

RunResult run_zhu(const RunConfig& cfg);
RunResult run_module(const RunConfig& cfg);
RunResult run_verify(const RunConfig& cfg);

// Dispatches on cfg.command and maps library exceptions to exit codes.
// Error runs still produce a document with an "error" record.
RunResult run(const RunConfig& cfg);

// Serialized document: two-space indentation, trailing newline.
std::string render(const Json& doc);

}  // namespace tzhu::cli
