/// @file commands.hpp
/// @brief Command implementations behind the CLI: plain genus evaluation,
/// equivariant character reports, and named verification suites.
///
/// Each command returns its report in both JSON and CSV renderings plus the
/// process exit code, so the binary itself stays a thin argument parser.

#pragma once

#include <genera/json_io.hpp>
#include <genera/verify.hpp>

#include <optional>
#include <string>

namespace genera {

/// Command-line overrides applied on top of parsed scenario options.
struct CommandOverrides {
    std::optional<int> q_order;
    std::optional<unsigned long long> seed;
};

/// Outcome of one command.  Exit codes are a stable contract:
/// 0 success, 1 check failure, 2 invalid input, 3 precondition violation.
/// `error` carries the stderr diagnostic when exit_code is 2 or 3; the
/// report strings are empty in that case.
struct CommandReport {
    std::string json;
    std::string csv;
    std::string error;
    int exit_code = 0;
};

/// Evaluates a plain (action-free) scenario: a classical genus, a twisted
/// index, a loop-space or cusp expansion, or the finite cusp values.
CommandReport cmd_genus(const std::string& scenario_text,
                        const CommandOverrides& ov = {});

/// Evaluates an equivariant scenario: the reduced character at the fixed
/// points, the constancy verdict, and the non-equivariant cross-check.
CommandReport cmd_equivariant(const std::string& scenario_text,
                              const CommandOverrides& ov = {});

/// Runs a named verification suite with per-check timing; failing checks
/// carry a replayable counterexample scenario.
CommandReport cmd_verify(const std::string& suite, unsigned long long seed,
                         int q_order);

}  // namespace genera
