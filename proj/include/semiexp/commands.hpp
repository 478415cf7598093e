#pragma once

// Report documents behind the command line front end. A report is
//   {"command": name, "input": <the input document>, "result": {...}}
// so it can be rechecked later without the original files.

#include <cstdint>
#include <string>
#include <vector>

#include "semiexp/io.hpp"

namespace semiexp {

struct CommandOptions {
  std::size_t   budget = kDefaultEnumerationBudget;
  std::uint64_t seed   = 0;
};

struct CommandResult {
  io::json report;
  int      status = 0;  // 0 decided, 2 undecided
};

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"analyze", "action", "theoremb", "rees",
                                              "union",   "laurent", "family"};
  return names;
}

// Throws Error (ParseError and the validation codes) on bad input.
CommandResult run_command(const std::string& command, const io::json& input,
                          const CommandOptions& options = {});

struct VerifyOutcome {
  std::size_t              checks = 0;
  std::vector<std::string> failures;
  [[nodiscard]] bool       ok() const { return failures.empty(); }
};

// Rechecks the certificates embedded in a report. Decisions are not
// recomputed; only witnesses are.
VerifyOutcome verify_report(const io::json& report);

}  // namespace semiexp
