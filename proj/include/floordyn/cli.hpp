#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "floordyn/numeric.hpp"
#include "floordyn/dynamics.hpp"

namespace floordyn::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kMismatch = 2;

/// Runs one subcommand. args[0] is the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "X,Y" with rational coordinates.
Point parse_point(const std::string& text);
/// "LO:HI".
std::pair<Rational, Rational> parse_range(const std::string& text);
/// Comma-separated rationals.
std::vector<Rational> parse_rational_list(const std::string& text);

}  // namespace floordyn::cli
