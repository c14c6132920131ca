/**
 * @file cli.hpp
 * @brief Batch runner behind the command-line tool: argument parsing, suite
 * orchestration and the JSON report document.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "uqrs/suites.hpp"

namespace uqrs {

enum ExitCode : int { kExitPass = 0, kExitRelationFailure = 1, kExitConfigError = 2, kExitInternalError = 3 };

struct RunConfig {
  SuiteConfig suite;
  /// Suite ids in run order; empty means all.
  std::vector<std::string> suites;
  std::string report_path;
  bool quiet = false;
};

/// Outcome of parsing the command line: either a config or an exit code with a message.
struct ParseOutcome {
  bool ok = false;
  int exit_code = kExitPass;
  std::string message;
  RunConfig config;
};

/// Parses "lo..hi"; throws std::invalid_argument on malformed input or lo > hi.
std::pair<int, int> parse_mode_window(const std::string& text);

/**
 * @brief Parses command-line arguments. Help requests return ok = false with
 * exit code 0; invalid input returns the config-error code.
 */
ParseOutcome parse_command_line(int argc, const char* const* argv);

/// Result of a batch run.
struct RunResult {
  int exit_code = kExitPass;
  /// The report document serialized as JSON.
  std::string report;
  std::vector<RelationReport> reports;
};

/**
 * @brief Runs the requested suites, builds the report document and writes it to
 * report_path when set. Suite crashes are recorded and yield the internal-error
 * code; relation failures yield the relation-failure code.
 */
RunResult run_batch(const RunConfig& cfg, std::ostream* log = nullptr);

}  // namespace uqrs
