#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace freight::cli {

inline constexpr std::string_view version = "1.0.0";

enum ExitCode : int {
    ok = 0,
    usage = 1,
    input = 2,
    domain = 3,
};

/// Runs one subcommand. args[0] is the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lower-case hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

} // namespace freight::cli
