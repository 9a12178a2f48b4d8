#pragma once

#include <iosfwd>

namespace otype::cli {

/// Exit codes of the `otype` tool.
enum ExitCode : int {
    kOk = 0,
    kSuiteFailure = 1,
    kUsageError = 2,  ///< bad command line, syntax error, or input outside an operation's domain
    kResourceError = 3,
};

/// Runs `otype <command> ...` writing results to `out` and diagnostics to `err`.
///
///   otype eval EXPR               canonical CNF of o(EXPR)
///   otype decompose EXPR          delta, m, k with o(EXPR) = delta + m
///   otype compare EXPR EXPR       less / equal / greater
///   otype trace EXPR              proof-trace recursion for P . Q with finite Q
///   otype check SUITE|all         property suites
///   otype counterexample          o((w+1).antichain(2)) against o(w+1)*o(antichain(2))
///
/// Options: --json, --seed N, --cases N, --cap N.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace otype::cli
