#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gross/parser.hpp"

namespace gross::cli {

// Exit codes: 0 success, 1 expression parse error, 2 arithmetic/domain
// error, 3 usage error.
struct CommandResult {
  int exit_code = 0;
  std::string out;  // stdout payload (human text or one machine JSON line)
  std::string err;  // stderr diagnostics
};

// Runs one CLI invocation (argv without the program name). The `repl`
// subcommand is the exception: it streams on the process stdio instead of
// returning captured text.
CommandResult run_command(const std::vector<std::string>& argv);

// Line-oriented session: each line is an expression or one of
// eval/classify/shape/decompose/help/quit. Recoverable errors are reported
// inline and the session continues. The prompt goes to `err` so that piped
// stdout stays clean.
void repl(std::istream& in, std::ostream& out, std::ostream& err, Style style = Style::Unicode);

}  // namespace gross::cli
