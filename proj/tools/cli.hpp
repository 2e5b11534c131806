#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fincat::cli {

/// Exit codes: 0 every verdict passed, 1 a check failed, 2 bad input.
enum Exit : int { kPass = 0, kCheckFailed = 1, kInputError = 2 };

inline constexpr const char* kSchema = "fincat-report/1";

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace fincat::cli
