#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitVerification = 3;

/// Runs one command line (without the program name). Reports go to `--out`
/// or to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latint::cli
