// Entry point of the `trip` command-line tool, exposed as a library function
// so tests can drive the full argument-parsing and dispatch path in-process.
#pragma once

namespace trip::cli {

/// Parse arguments and dispatch to a subcommand.
/// Exit codes: 0 = pass, 1 = assertion failure in a checking pipeline,
/// 2 = usage or domain error.
int run(int argc, const char* const* argv);

}  // namespace trip::cli
