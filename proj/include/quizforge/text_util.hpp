#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace quizforge {

std::vector<std::string> split_lines(std::string_view text);

std::string_view trim_view(std::string_view s);
std::string trim(std::string_view s);

bool is_blank(std::string_view s);

/// MATLAB-style quote disambiguation: a `'` opens a string literal unless the
/// character immediately before it can end an operand, in which case it is the
/// transpose operator.
bool quote_is_transpose(char prev);

/// Splits on `sep` at paren/bracket depth zero, skipping single-quoted string
/// literals (with `''` as an escaped quote).
std::vector<std::string> split_top_level(std::string_view s, char sep);

/// Renders a double with no exponent and no trailing zeros: integers print as
/// integers, other values use the shortest fixed-point form that parses back
/// to the same double.
std::string render_number(double x);

} // namespace quizforge
