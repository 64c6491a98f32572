#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "ogsr/errors.hpp"

namespace ogsr {

// Exact arithmetic backbone. cpp_rational keeps fractions reduced with a
// positive denominator, which is what makes payload equality syntactic.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool rat_is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline Int int_pow(Int base, unsigned exp) {
    Int acc = 1;
    while (exp > 0) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1u;
    }
    return acc;
}

// 2^{-k} as an exact rational.
inline Rat pow2_neg(unsigned k) { return Rat(Int(1), int_pow(Int(2), k)); }

// p^{-k} as an exact rational.
inline Rat pow_neg(const Int& p, unsigned k) { return Rat(Int(1), int_pow(p, k)); }

inline std::string render_int(const Int& n) { return n.str(); }

// Canonical rational text: "p/q", or "p" when the denominator is one.
inline std::string render_rat(const Rat& q) {
    if (rat_is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline bool is_integer_text(std::string_view s) {
    s = trimmed(s);
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline Int parse_int(std::string_view text) {
    std::string_view s = trimmed(text);
    if (!is_integer_text(s)) throw ParseError("expected an integer, got '" + std::string(text) + "'");
    return Int(std::string(s));
}

// Grammar: p or p/q with integer p, q and q != 0.
inline Rat parse_rat(std::string_view text) {
    std::string_view s = trimmed(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(s));
    Int num = parse_int(s.substr(0, slash));
    Int den = parse_int(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rat(num, den);
}

inline bool is_small_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace ogsr
