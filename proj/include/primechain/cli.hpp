#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primechain::cli {

/// Default for --threads when the flag is absent.
inline constexpr const char* kThreadsEnv = "PRIMECHAIN_THREADS";

/// Runs one command. args excludes the program name. Returns 0 on success,
/// 1 on a library error (error JSON on err) or a failed verify, 2 on a
/// usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace primechain::cli
