#pragma once

#include <ostream>

namespace adjrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `adjrep` command. Exit code 0 on success, 1 when a
/// verification finds a mismatch, 2 on usage, parse or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace adjrep::cli
