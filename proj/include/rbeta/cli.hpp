#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbeta/weierstrass.hpp"

namespace rbeta::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "a", "bi", "a+bi", "a-bi" (whitespace allowed around the sign,
/// plain decimal numbers, "i" alone means 1i). Returns nullopt otherwise.
std::optional<Complex> parse_complex(std::string_view text);

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbeta::cli
