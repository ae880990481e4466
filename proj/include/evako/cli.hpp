#pragma once

// Command line front end. Results go to `out` as one JSON document per
// line (or a short summary with --human); diagnostics go to `err`.
//
// Exit codes: 0 success, 1 negative verdict, 2 input or precondition
// error, 3 resource limit, 4 theorem violation.
//
// Environment: EVAKO_BUDGET_NODES sets the classifier node budget
// (default 1000000, overridden by --budget); EVAKO_SEED seeds
// `gen random_graph` when --seed is absent (default 0).

#include <iosfwd>

namespace evako::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitTheorem = 4;

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace evako::cli
