#pragma once

#include <iostream>
#include <string>

#include "wdk/local_theory.hpp"
#include "wdk/solver.hpp"

namespace wdk::cli {

// Exit codes of run(): 0 certified success, 1 converged without certificate,
// 2 degenerate or iteration budget exhausted (or validation unsatisfied),
// 3 malformed input.
inline constexpr int kExitCertified = 0;
inline constexpr int kExitUncertified = 1;
inline constexpr int kExitNotConverged = 2;
inline constexpr int kExitInputError = 3;

/// Parses a comma-separated list of complex tokens: "re", "re+imi", "re-imi",
/// or pure "imi" (e.g. "1,0,-1" or "1.5+2i,-0.25-1i,3i").
CVec parse_complex_list(const std::string& text);

/// Single complex token, same grammar.
Complex parse_complex(const std::string& token);

/// Stable machine-readable report (keys: status, degree, p, certificate,
/// roots, disks, iterations, trace, bounds).
std::string emit_json(const SolveReport& report);

std::string emit_json(const LocalCheckReport& report);

/// Entry point behind the wdk executable; parses argv and executes the
/// solve/validate/radii command, writing human-readable output to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace wdk::cli
