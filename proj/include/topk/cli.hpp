#pragma once

#include <iosfwd>
#include <string>

namespace topk::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;   // unreadable/invalid input or flags
inline constexpr int kExitDomain = 3;  // size, range or domain violations

/// permscan prints info_bits with this many decimals so that the
/// completeness sum over its rows holds to 1e-6.
inline constexpr int kPermscanBitsDecimals = 9;

/// Fixed-point rendering; a negative zero prints without the sign.
std::string format_fixed(double x, int decimals);

/// Fixed 4-decimal rendering used by every other output.
std::string format_fixed4(double x);

/// Entry point of the `topkinfo` tool: subcommands info, sweep, permscan
/// and matrix. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace topk::cli
