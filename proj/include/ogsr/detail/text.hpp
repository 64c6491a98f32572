#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ogsr/errors.hpp"
#include "ogsr/numeric.hpp"

namespace ogsr::detail {

// Splits "a,b,c" at top nesting level, honouring (), [] and {} so nested
// element literals survive. An empty body yields no parts.
inline std::vector<std::string_view> split_top_level(std::string_view body, char sep = ',') {
    std::vector<std::string_view> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < body.size(); ++i) {
        char c = body[i];
        if (c == '(' || c == '[' || c == '{') ++depth;
        else if (c == ')' || c == ']' || c == '}') --depth;
        else if (c == sep && depth == 0) {
            parts.push_back(body.substr(start, i - start));
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(body) + "'");
    std::string_view last = body.substr(start);
    if (!parts.empty() || !trimmed(last).empty()) parts.push_back(last);
    return parts;
}

// Strips one layer of enclosing brackets, e.g. "[...]" -> "...".
inline std::string_view strip_brackets(std::string_view text, char open, char close,
                                       const char* what) {
    std::string_view s = trimmed(text);
    if (s.size() < 2 || s.front() != open || s.back() != close)
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(text) + "'");
    return s.substr(1, s.size() - 2);
}

} // namespace ogsr::detail
