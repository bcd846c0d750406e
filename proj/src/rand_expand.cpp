#include "quizforge/rand_expand.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>

#include "quizforge/diagnostics.hpp"
#include "quizforge/text_util.hpp"

namespace quizforge {

namespace {

constexpr int kDistinctDrawBudget = 1000;

std::optional<double> parse_number(std::string_view text) {
    std::string t = trim(text);
    if (t.empty()) return std::nullopt;
    const char* begin = t.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + t.size()) return std::nullopt;
    return v;
}

// Number of progression elements of a + i*s landing in [min(a,b), max-side b],
// with a small relative tolerance so fractional steps behave predictably.
long long progression_count(double a, double s, double b) {
    if (s == 0) return -1;
    double span = (b - a) / s;
    if (span < 0) return 0;
    return static_cast<long long>(std::floor(span + 1e-10)) + 1;
}

void append_numeric_range(CurlyList& out, const std::string& item) {
    auto parts = split_top_level(item, ':');
    if (parts.size() > 3)
        throw SpikeError(ErrorCode::MalformedItem,
                         "range '" + item + "' has too many ':' separators");
    auto a = parse_number(parts[0]);
    auto b = parse_number(parts.back());
    std::optional<double> s = 1.0;
    if (parts.size() == 3) s = parse_number(parts[1]);
    if (!a || !b || !s)
        throw SpikeError(ErrorCode::MalformedItem, "malformed range '" + item + "'");
    if (*s == 0)
        throw SpikeError(ErrorCode::MalformedItem, "range '" + item + "' has step 0");
    long long n = progression_count(*a, *s, *b);
    if (n <= 0)
        throw SpikeError(ErrorCode::EmptyRange, "range '" + item + "' is empty");
    for (long long i = 0; i < n; ++i) out.emplace_back(*a + static_cast<double>(i) * *s);
}

// Extracts the literal between the quotes of 'xyz' (with '' as escaped quote);
// returns nullopt when item is not a lone quoted string.
std::optional<std::string> parse_quoted(std::string_view item) {
    if (item.size() < 2 || item.front() != '\'' || item.back() != '\'') return std::nullopt;
    std::string out;
    for (std::size_t i = 1; i + 1 < item.size(); ++i) {
        if (item[i] == '\'') {
            if (item[i + 1] != '\'' || i + 2 >= item.size()) return std::nullopt;
            out += '\'';
            ++i;
            continue;
        }
        out += item[i];
    }
    return out;
}

void append_item(CurlyList& out, const std::string& raw) {
    std::string item = trim(raw);
    if (item.empty())
        throw SpikeError(ErrorCode::MalformedItem, "empty item in curly list");

    if (item.front() == '\'') {
        // quoted string or character range 'x'..'y'
        std::size_t dots = item.find("..");
        if (dots != std::string::npos) {
            auto lo = parse_quoted(trim_view(std::string_view(item).substr(0, dots)));
            auto hi = parse_quoted(trim_view(std::string_view(item).substr(dots + 2)));
            if (!lo || !hi || lo->size() != 1 || hi->size() != 1)
                throw SpikeError(ErrorCode::MalformedItem,
                                 "character range '" + item + "' needs single-character endpoints");
            if (hi->front() < lo->front())
                throw SpikeError(ErrorCode::EmptyRange,
                                 "character range '" + item + "' is empty");
            for (char c = lo->front(); c <= hi->front(); ++c)
                out.emplace_back(std::string(1, c));
            return;
        }
        auto str = parse_quoted(item);
        if (!str)
            throw SpikeError(ErrorCode::MalformedItem, "malformed string item " + item);
        out.emplace_back(*str);
        return;
    }

    if (item.find(':') != std::string::npos) {
        append_numeric_range(out, item);
        return;
    }
    auto num = parse_number(item);
    if (!num)
        throw SpikeError(ErrorCode::MalformedItem, "malformed item '" + item + "'");
    out.emplace_back(*num);
}

} // namespace

std::string render_atom(const CurlyAtom& atom) {
    if (std::holds_alternative<double>(atom))
        return render_number(std::get<double>(atom));
    return "'" + std::get<std::string>(atom) + "'";
}

CurlyList parse_curly_list(const std::string& body) {
    if (trim_view(body).empty())
        throw SpikeError(ErrorCode::EmptyList, "empty curly list");
    CurlyList list;
    for (const auto& item : split_top_level(body, ','))
        append_item(list, item);
    return list;
}

namespace {

// Positions of characters lying inside single-quoted string literals, using
// the same transpose-vs-quote rule as the interpreter's lexer.
std::vector<bool> string_mask(const std::string& line) {
    std::vector<bool> mask(line.size(), false);
    bool in_str = false;
    char prev = '\0';
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (in_str) {
            mask[i] = true;
            if (c == '\'') {
                if (i + 1 < line.size() && line[i + 1] == '\'') {
                    mask[i + 1] = true;
                    ++i;
                } else {
                    in_str = false;
                }
            }
            prev = c;
            continue;
        }
        if (c == '\'' && !quote_is_transpose(prev)) {
            in_str = true;
            mask[i] = true;
        }
        prev = c;
    }
    return mask;
}

} // namespace

std::string expand_line(const std::string& line, RandomStream& rng) {
    std::string cur = line;
    for (;;) {
        auto mask = string_mask(cur);
        std::size_t open = std::string::npos;
        std::size_t close = std::string::npos;
        std::size_t last_open = std::string::npos;
        bool any = false;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            if (mask[i]) continue;
            if (cur[i] == '{') {
                last_open = i;
                any = true;
            } else if (cur[i] == '}') {
                if (last_open == std::string::npos)
                    throw SpikeError(ErrorCode::UnbalancedBraces,
                                     "'}' with no matching '{' in: " + line);
                open = last_open;
                close = i;
                break;
            }
        }
        if (close == std::string::npos) {
            if (any)
                throw SpikeError(ErrorCode::UnbalancedBraces,
                                 "'{' with no matching '}' in: " + line);
            return cur;
        }
        CurlyList list = parse_curly_list(cur.substr(open + 1, close - open - 1));
        const CurlyAtom& pick = list[rng.next_index(list.size())];
        cur = cur.substr(0, open) + render_atom(pick) + cur.substr(close + 1);
    }
}

bool is_multi_assign_line(const std::string& line) {
    auto mask = string_mask(line);
    for (std::size_t i = 0; i + 1 < line.size(); ++i)
        if (!mask[i] && line[i] == '!' && (line[i + 1] == '=' || line[i + 1] == '<'))
            return true;
    return false;
}

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

bool atom_equal(const CurlyAtom& a, const CurlyAtom& b) { return a == b; }

bool atom_less(const CurlyAtom& a, const CurlyAtom& b) {
    if (a.index() != b.index()) return a.index() < b.index(); // numbers before strings
    if (std::holds_alternative<double>(a))
        return std::get<double>(a) < std::get<double>(b);
    return std::get<std::string>(a) < std::get<std::string>(b);
}

} // namespace

std::string expand_multi_assign(const std::string& line, RandomStream& rng) {
    auto mask = string_mask(line);
    std::size_t op = std::string::npos;
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        if (!mask[i] && line[i] == '!' && (line[i + 1] == '=' || line[i + 1] == '<')) {
            op = i;
            break;
        }
    }
    if (op == std::string::npos)
        throw SpikeError(ErrorCode::MalformedMultiAssign, "no '!=' or '!<' in: " + line);
    bool sorted = line[op + 1] == '<';

    std::vector<std::string> vars;
    for (auto& v : split_top_level(std::string_view(line).substr(0, op), ',')) {
        std::string name = trim(v);
        if (!is_identifier(name))
            throw SpikeError(ErrorCode::MalformedMultiAssign,
                             "'" + name + "' is not a variable name in: " + line);
        vars.push_back(std::move(name));
    }
    if (vars.empty())
        throw SpikeError(ErrorCode::MalformedMultiAssign, "no variables before operator");

    // right side must be exactly one {list}; and nothing else
    std::string rhs = trim(std::string_view(line).substr(op + 2));
    if (rhs.empty() || rhs.front() != '{' || rhs.back() != ';')
        throw SpikeError(ErrorCode::MalformedMultiAssign,
                         "right side must be a single '{list};' in: " + line);
    std::string inner = trim(rhs.substr(1, rhs.size() - 2));
    if (inner.empty() || inner.back() != '}')
        throw SpikeError(ErrorCode::MalformedMultiAssign,
                         "right side must be a single '{list};' in: " + line);
    std::string body = inner.substr(0, inner.size() - 1);
    auto body_mask = string_mask(body);
    for (std::size_t i = 0; i < body.size(); ++i)
        if (!body_mask[i] && (body[i] == '{' || body[i] == '}'))
            throw SpikeError(ErrorCode::MalformedMultiAssign,
                             "nested curly brackets are not allowed in: " + line);

    CurlyList list = parse_curly_list(body);
    std::vector<CurlyAtom> chosen;
    for (std::size_t slot = 0; slot < vars.size(); ++slot) {
        bool found = false;
        for (int attempt = 0; attempt < kDistinctDrawBudget; ++attempt) {
            const CurlyAtom& pick = list[rng.next_index(list.size())];
            bool dup = false;
            for (const auto& c : chosen)
                if (atom_equal(c, pick)) { dup = true; break; }
            if (!dup) {
                chosen.push_back(pick);
                found = true;
                break;
            }
        }
        if (!found)
            throw SpikeError(ErrorCode::NotEnoughDistinctValues,
                             "could not draw " + std::to_string(vars.size()) +
                                 " distinct values from the list in: " + line);
    }
    if (sorted) std::sort(chosen.begin(), chosen.end(), atom_less);

    std::string out;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i > 0) out += ' ';
        out += vars[i] + "=" + render_atom(chosen[i]) + ";";
    }
    return out;
}

std::string expand_statement_line(const std::string& line, RandomStream& rng) {
    if (is_multi_assign_line(line)) return expand_multi_assign(line, rng);
    return expand_line(line, rng);
}

std::vector<std::string> expand_lines(const std::vector<std::string>& lines,
                                      RandomStream& rng) {
    std::vector<std::string> out;
    out.reserve(lines.size());
    for (const auto& line : lines) out.push_back(expand_statement_line(line, rng));
    return out;
}

} // namespace quizforge
