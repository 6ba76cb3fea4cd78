#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pairdiss {

/// Twelve significant digits; non-finite values become the tokens
/// `inf`, `-inf` and `undef` (NaN).
std::string format_number(double value);

/// Same as format_number, with an absent value rendered as `undef`.
std::string format_number(const std::optional<double>& value);

/// Parses a real number that may be one of `inf`, `+inf`, `-inf`
/// (case-insensitive). NaN and trailing garbage are rejected.
double parse_extended_real(std::string_view text);

/// Splits on `sep`, trimming surrounding whitespace from each piece.
std::vector<std::string> split(std::string_view text, char sep);

}  // namespace pairdiss
