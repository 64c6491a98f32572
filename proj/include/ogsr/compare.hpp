#pragma once

#include "ogsr/numeric.hpp"

namespace ogsr {

// Four-valued verdict of a decidable partial order. Incomparable is a
// first-class answer, not an error: componentwise and cone-generated
// instances produce it routinely.
enum class Comparison { Less, Equal, Greater, Incomparable };

constexpr bool cmp_leq(Comparison c) { return c == Comparison::Less || c == Comparison::Equal; }
constexpr bool cmp_geq(Comparison c) { return c == Comparison::Greater || c == Comparison::Equal; }

constexpr Comparison cmp_reversed(Comparison c) {
    switch (c) {
        case Comparison::Less: return Comparison::Greater;
        case Comparison::Greater: return Comparison::Less;
        default: return c;
    }
}

constexpr const char* to_string(Comparison c) {
    switch (c) {
        case Comparison::Less: return "Less";
        case Comparison::Equal: return "Equal";
        case Comparison::Greater: return "Greater";
        default: return "Incomparable";
    }
}

inline Comparison compare_rat(const Rat& a, const Rat& b) {
    if (a == b) return Comparison::Equal;
    return a < b ? Comparison::Less : Comparison::Greater;
}

} // namespace ogsr
