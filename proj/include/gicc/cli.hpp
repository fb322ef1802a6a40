#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace gicc::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,  ///< invalid structure or failed decode
  kInputError = 2,   ///< unreadable file, parse error, bad parameters
  kSizeGate = 3,     ///< exact oracle requested beyond its size limit
};

struct RunReport {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  int exit_status = kPass;
  /// Human-readable rendering of `results`.
  std::string text;

  nlohmann::json to_json() const;
};

/// Parses argv, runs one subcommand, and writes either the text rendering or
/// (with --json) a single JSON record to `out`. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gicc::cli
