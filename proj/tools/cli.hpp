#pragma once

#include <cstddef>
#include <iosfwd>

namespace riesz::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Chunk count of every reduction the CLI runs. Fixed, so output does not
/// depend on --threads.
inline constexpr std::size_t kReductionChunks = 64;

/// Runs one subcommand. Exit codes: 0 success, 1 validation or usage error,
/// 2 numerical-contract violation.
int run(int argc, char** argv);

/// Same, with explicit streams (used by tests).
int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli
