#pragma once

#include <string>

namespace freight::fmtx {

/// Fixed-point text with round-half-even on the binary value (printf semantics).
/// Negative zero results are printed without the sign.
std::string fixed(double value, int decimals);

/// The double denoted by fixed(value, decimals); every renderer rounds through this.
double rounded(double value, int decimals);

/// Fraction rendered as percent: percent(0.0682, 2) == "6.82%".
std::string percent(double fraction, int decimals);

/// Percent with trailing zeros (and a bare point) removed: 0.01 -> "1%", 0.025 -> "2.5%".
std::string percent_compact(double fraction, int max_decimals = 4);

/// Fixed-point with trailing zeros removed.
std::string compact(double value, int max_decimals);

/// Thousands-grouped fixed-point: grouped(530161, 0) == "530,161".
std::string grouped(double value, int decimals);

/// Dollar amount; negatives in parentheses when requested: "($59.66)", else "-$59.66".
std::string dollars(double value, int decimals, bool parenthesize_negative);

} // namespace freight::fmtx
