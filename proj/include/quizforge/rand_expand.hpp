#pragma once

#include <string>
#include <variant>
#include <vector>

#include "quizforge/random.hpp"

namespace quizforge {

/// One element of a curly list: either a number or a string. Duplicates in a
/// list are kept, which is what makes the draw weighted.
using CurlyAtom = std::variant<double, std::string>;
using CurlyList = std::vector<CurlyAtom>;

std::string render_atom(const CurlyAtom& atom);

/// Parses the text strictly between `{` and `}` into its expanded multiset.
/// Items: numbers, numeric ranges `a:b` / `a:s:b`, quoted strings, quoted
/// character ranges `'x'..'y'`.
CurlyList parse_curly_list(const std::string& body);

/// Replaces every brace pair in the line, leftmost-innermost first, with a
/// uniformly drawn element of its list. Braces inside single-quoted string
/// literals are left alone.
std::string expand_line(const std::string& line, RandomStream& rng);

/// Handles `v1,...,vn != {list};` and `!<`: draws n distinct values and
/// returns n plain assignment statements on one line.
std::string expand_multi_assign(const std::string& line, RandomStream& rng);

/// True when the line uses a multiple-assignment operator outside strings.
bool is_multi_assign_line(const std::string& line);

/// The per-line preprocessing pass: multiple assignment when present,
/// otherwise brace expansion.
std::string expand_statement_line(const std::string& line, RandomStream& rng);

std::vector<std::string> expand_lines(const std::vector<std::string>& lines,
                                      RandomStream& rng);

} // namespace quizforge
