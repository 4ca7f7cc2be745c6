#pragma once

#include <ostream>
#include <string_view>

#include "cuspval/exactnum.hpp"

namespace cuspval::cli {

enum ExitCode : int { ok = 0, usage_error = 1, verification_failure = 2, indecisive = 3 };

/// "sqrt2" or an explicit expansion "[d0; d1, ..., (p1, p2, ...)]" whose
/// parenthesized tail repeats forever. Throws InvalidArgument.
CFStream parse_stream_spec(std::string_view text);

/// Parses argv, runs one command, writes results to out (or to --out) and
/// diagnostics to err. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cuspval::cli
