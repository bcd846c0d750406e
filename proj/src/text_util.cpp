#include "quizforge/text_util.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace quizforge {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line;
        if (nl == std::string_view::npos) {
            line = text.substr(start);
            start = text.size();
        } else {
            line = text.substr(start, nl - start);
            start = nl + 1;
        }
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
    }
    return lines;
}

std::string_view trim_view(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string trim(std::string_view s) { return std::string(trim_view(s)); }

bool is_blank(std::string_view s) { return trim_view(s).empty(); }

bool quote_is_transpose(char prev) {
    return std::isalnum(static_cast<unsigned char>(prev)) || prev == '_' ||
           prev == ')' || prev == ']' || prev == '\'';
}

std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    bool in_str = false;
    char prev = '\0';
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (in_str) {
            if (c == '\'') {
                if (i + 1 < s.size() && s[i + 1] == '\'') {
                    cur += "''";
                    ++i;
                    prev = '\'';
                    continue;
                }
                in_str = false;
            }
            cur += c;
            prev = c;
            continue;
        }
        if (c == '\'' && !quote_is_transpose(prev)) {
            in_str = true;
            cur += c;
            prev = c;
            continue;
        }
        if (c == '(' || c == '[' || c == '{') ++depth;
        if (c == ')' || c == ']' || c == '}') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
            prev = '\0';
            continue;
        }
        cur += c;
        prev = c;
    }
    parts.push_back(cur);
    return parts;
}

std::string render_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    if (x == 0.0) return "0";
    if (x == std::floor(x) && std::fabs(x) < 9007199254740992.0) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
        return buf;
    }
    char buf[512];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*f", prec, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17f", x);
    return buf;
}

} // namespace quizforge
