#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation, data or I/O failure
inline constexpr int kExitUsage = 2;

/// Runs the `fq` command line. `args` excludes the program name. Text output
/// goes to `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fq::cli
