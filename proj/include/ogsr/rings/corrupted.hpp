#pragma once

#include "ogsr/rings/rationals.hpp"

namespace ogsr {

// Negative controls for the checkers. Each fixture takes the rational
// carrier and damages exactly one law, so the corresponding sampled check
// must fail with a concrete witness while everything else stays intact.

// Addition computes a + 2b: commutativity and the identity law break.
class CorruptedAddRing final : public Ring {
public:
    std::string name() const override { return "corrupt-add"; }
    Carrier carrier() const override { return Carrier::Rationals; }
    OrderKind order_kind() const override { return OrderKind::Total; }
    bool divisible_by_integers() const override { return true; }

    Payload zero_payload() const override { return Rat(0); }
    Payload one_payload() const override { return Rat(1); }

    Payload add_payload(const Payload& a, const Payload& b) const override {
        return Rat(as_rat(a) + 2 * as_rat(b));
    }
    Payload neg_payload(const Payload& a) const override { return Rat(-as_rat(a)); }
    Payload mul_payload(const Payload& a, const Payload& b) const override {
        return Rat(as_rat(a) * as_rat(b));
    }
    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        return compare_rat(as_rat(a), as_rat(b));
    }
    Payload parse_payload(std::string_view text) const override { return parse_rat(text); }
    std::string render_payload(const Payload& p) const override { return render_rat(as_rat(p)); }
    Payload sample_payload(Sampler& s) const override { return s.rational(24, 12); }
};

// The positivity predicate claims every element is nonnegative, so the
// comparator answers Greater for every unequal pair: antisymmetry breaks.
class CorruptedConeRing final : public Ring {
public:
    std::string name() const override { return "corrupt-cone"; }
    Carrier carrier() const override { return Carrier::Rationals; }
    OrderKind order_kind() const override { return OrderKind::ConeGenerated; }
    bool divisible_by_integers() const override { return true; }

    Payload zero_payload() const override { return Rat(0); }
    Payload one_payload() const override { return Rat(1); }

    Payload add_payload(const Payload& a, const Payload& b) const override {
        return Rat(as_rat(a) + as_rat(b));
    }
    Payload neg_payload(const Payload& a) const override { return Rat(-as_rat(a)); }
    Payload mul_payload(const Payload& a, const Payload& b) const override {
        return Rat(as_rat(a) * as_rat(b));
    }
    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        return as_rat(a) == as_rat(b) ? Comparison::Equal : Comparison::Greater;
    }
    Payload parse_payload(std::string_view text) const override { return parse_rat(text); }
    std::string render_payload(const Payload& p) const override { return render_rat(as_rat(p)); }
    Payload sample_payload(Sampler& s) const override { return s.rational(24, 12); }
};

// Multiplication computes a*b + 1: distributivity breaks, and geometric
// partial sums escape their witness bound, which is what the series
// invariant guard exists to catch.
class CorruptedMulRing final : public Ring {
public:
    std::string name() const override { return "corrupt-mul"; }
    Carrier carrier() const override { return Carrier::Rationals; }
    OrderKind order_kind() const override { return OrderKind::Total; }
    bool divisible_by_integers() const override { return true; }

    Payload zero_payload() const override { return Rat(0); }
    Payload one_payload() const override { return Rat(1); }

    Payload add_payload(const Payload& a, const Payload& b) const override {
        return Rat(as_rat(a) + as_rat(b));
    }
    Payload neg_payload(const Payload& a) const override { return Rat(-as_rat(a)); }
    Payload mul_payload(const Payload& a, const Payload& b) const override {
        return Rat(as_rat(a) * as_rat(b) + 1);
    }
    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        return compare_rat(as_rat(a), as_rat(b));
    }
    Payload parse_payload(std::string_view text) const override { return parse_rat(text); }
    std::string render_payload(const Payload& p) const override { return render_rat(as_rat(p)); }
    Payload sample_payload(Sampler& s) const override { return s.rational(24, 12); }
};

inline RingPtr make_corrupt_add() { return std::make_shared<CorruptedAddRing>(); }
inline RingPtr make_corrupt_cone() { return std::make_shared<CorruptedConeRing>(); }
inline RingPtr make_corrupt_mul() { return std::make_shared<CorruptedMulRing>(); }

} // namespace ogsr
