#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ogsr/detail/text.hpp"
#include "ogsr/element.hpp"

namespace ogsr::detail {

// Coefficient lists are ascending by degree and trimmed: no trailing
// zeros, zero is the empty list.
inline void trim_coeffs(Coords& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

inline Coords add_coeffs(const Coords& a, const Coords& b) {
    Coords out(std::max(a.size(), b.size()), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim_coeffs(out);
    return out;
}

inline Coords neg_coeffs(const Coords& a) {
    Coords out(a);
    for (auto& c : out) c = -c;
    return out;
}

// Plain convolution. Truncating carriers cut the result afterwards.
inline Coords mul_coeffs(const Coords& a, const Coords& b) {
    if (a.empty() || b.empty()) return {};
    Coords out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim_coeffs(out);
    return out;
}

// Index of the lowest nonzero coefficient; c must be trimmed and nonzero.
inline std::size_t lowest_nonzero(const Coords& c) {
    std::size_t i = 0;
    while (c[i] == 0) ++i;
    return i;
}

inline std::string render_coeff_list(const Coords& c, char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += ',';
        out += render_rat(c[i]);
    }
    out += close;
    return out;
}

inline Coords parse_coeff_list(std::string_view text, char open, char close, const char* what) {
    std::string_view body = strip_brackets(text, open, close, what);
    Coords out;
    for (std::string_view part : split_top_level(body)) out.push_back(parse_rat(part));
    return out;
}

} // namespace ogsr::detail
