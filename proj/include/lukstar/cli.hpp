#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lukstar/term_synth.hpp"

namespace lukstar {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Reads "+*^2+*" style notation, outermost operation first; "id" is empty.
/// Also accepts "~" for NEG. Throws SyntaxError.
UnaryTerm parse_unary_term(const std::string& text);

}  // namespace lukstar
