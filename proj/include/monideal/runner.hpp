#pragma once

// Command execution behind the CLI: each command turns a document and a set
// of options into a text table and a single JSON line.

#include <cstdint>
#include <optional>
#include <string>

#include "monideal/document.hpp"

namespace monideal {

struct RunOptions {
  /// Falls back to the document's power directive, then 1.
  std::optional<unsigned> power;
  /// Or-ed with the document's closure directive.
  bool closure = false;
  unsigned nmax = 3;
  bool timing = false;
  std::uint64_t trials = 0;
  std::uint64_t seed = 1;
  Exponent max_exp = 0;
  /// Seconds per table row or per ideal; exhausted rows are reported as skipped.
  std::optional<double> budget_seconds;
  /// Restricts the command to one ideal of the document.
  std::optional<std::string> ideal_name;
  /// Suite name for the verify command.
  std::string suite;
};

struct RunReport {
  std::string command;
  std::string text;
  /// One line, newline-terminated. Byte-identical for identical input and
  /// options unless timing is requested.
  std::string json;
  /// 0 when every check passed, 1 otherwise.
  int exit_code = 0;
};

/// Commands: info, decompose, ass, closure, vnum, table, verify. verify
/// ignores doc and may be given nullptr; every other command needs a
/// document. UsageError for unknown commands, suites or ideal names.
RunReport run_command(const std::string& command, const IdealDocument* doc, const RunOptions& options);

} // namespace monideal
