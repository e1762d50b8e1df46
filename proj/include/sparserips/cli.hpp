#pragma once

#include <ostream>

namespace sparse_rips {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceGuard = 3;

/// Environment variable overriding the simplex cap of `persist`.
inline constexpr const char* kMaxSimplicesEnv = "SPARSE_RIPS_MAX_SIMPLICES";

/// The `sparse-rips` command line: generate, tree, sparsify, persist, plot, verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sparse_rips
