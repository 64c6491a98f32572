#pragma once

#include <memory>
#include <optional>
#include <string>

#include "ogsr/element.hpp"
#include "ogsr/errors.hpp"
#include "ogsr/sampler.hpp"

namespace ogsr {

enum class Carrier {
    Integers,
    Rationals,
    Polynomial,
    Pair,
    TruncatedSeries,
    Residue,
    StructureConstant,
};

enum class OrderKind {
    Total,
    Lexicographic,
    Antilexicographic,
    Componentwise,
    ConeGenerated,
};

inline const char* to_string(Carrier c) {
    switch (c) {
        case Carrier::Integers: return "integers";
        case Carrier::Rationals: return "rationals";
        case Carrier::Polynomial: return "polynomial";
        case Carrier::Pair: return "pair";
        case Carrier::TruncatedSeries: return "truncated-series";
        case Carrier::Residue: return "residue";
        default: return "structure-constant";
    }
}

inline const char* to_string(OrderKind k) {
    switch (k) {
        case OrderKind::Total: return "total";
        case OrderKind::Lexicographic: return "lexicographic";
        case OrderKind::Antilexicographic: return "antilexicographic";
        case OrderKind::Componentwise: return "componentwise";
        default: return "cone-generated";
    }
}

// Runtime description of a unital ring (multiplication need not be
// associative) with a decidable partial order. Subclasses provide the
// payload arithmetic; this base wraps it with instance guards and the
// Element-level interface. Instances are identified by their canonical
// name, so two separately built descriptions of the same ring interoperate.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    virtual ~Ring() = default;

    virtual std::string name() const = 0;
    virtual Carrier carrier() const = 0;
    virtual OrderKind order_kind() const = 0;

    // Whether the instance claims 1 >= 0. False only where no compatible
    // nontrivial order exists (residues).
    virtual bool declares_one_nonneg() const { return true; }

    // True when elements divide exactly by nonzero integers (needed by
    // midpoint-style witness constructions).
    virtual bool divisible_by_integers() const { return false; }

    virtual Payload zero_payload() const = 0;
    virtual Payload one_payload() const = 0;
    virtual Payload add_payload(const Payload& a, const Payload& b) const = 0;
    virtual Payload neg_payload(const Payload& a) const = 0;
    virtual Payload mul_payload(const Payload& a, const Payload& b) const = 0;
    virtual Comparison compare_payload(const Payload& a, const Payload& b) const = 0;
    virtual Payload parse_payload(std::string_view text) const = 0;
    virtual std::string render_payload(const Payload& p) const = 0;
    virtual Payload sample_payload(Sampler& s) const = 0;

    // A sample from the positive cone (for chain and convexity sampling).
    virtual Payload sample_nonneg_payload(Sampler& s) const {
        Payload p = sample_payload(s);
        Comparison c = compare_payload(p, zero_payload());
        if (c == Comparison::Less) return neg_payload(p);
        if (c == Comparison::Incomparable) return one_payload();
        return p;
    }

    // Valuation for carriers that have one (truncated series, residues).
    virtual std::optional<Int> ord_payload(const Payload&) const { return std::nullopt; }

    // Exact division by an integer scalar, where supported.
    virtual std::optional<Payload> divide_by_int_payload(const Payload&, const Int&) const {
        return std::nullopt;
    }

    Element zero() const { return Element(shared_from_this(), zero_payload()); }
    Element one() const { return Element(shared_from_this(), one_payload()); }
    Element make(Payload p) const { return Element(shared_from_this(), std::move(p)); }
    Element parse(std::string_view text) const { return make(parse_payload(text)); }
    Element sample(Sampler& s) const { return make(sample_payload(s)); }
    Element sample_nonneg(Sampler& s) const { return make(sample_nonneg_payload(s)); }

    // n * 1 built by repeated doubling; negative multiples negate.
    Element from_int(const Int& n) const {
        Element acc = zero();
        Element base = one();
        Int k = n < 0 ? Int(-n) : n;
        while (k > 0) {
            if ((k & 1) != 0) acc = make(add_payload(acc.payload(), base.payload()));
            base = make(add_payload(base.payload(), base.payload()));
            k >>= 1;
        }
        if (n < 0) return make(neg_payload(acc.payload()));
        return acc;
    }

    bool same_instance(const Ring& other) const {
        return this == &other || name() == other.name();
    }

    void guard(const Element& a, const Element& b, const char* op) const {
        if (!a.ring()->same_instance(*b.ring()))
            throw MixedRings(std::string(op) + ": operands from '" + a.ring()->name() +
                             "' and '" + b.ring()->name() + "'");
        if (!same_instance(*a.ring()))
            throw MixedRings(std::string(op) + ": operand from '" + a.ring()->name() +
                             "' used with '" + name() + "'");
    }
};

inline bool Element::is_zero() const { return payload_equal(payload_, ring_->zero_payload()); }
inline std::string Element::str() const { return ring_->render_payload(payload_); }

inline Element operator+(const Element& a, const Element& b) {
    a.ring()->guard(a, b, "add");
    return a.ring()->make(a.ring()->add_payload(a.payload(), b.payload()));
}

inline Element operator-(const Element& a) {
    return a.ring()->make(a.ring()->neg_payload(a.payload()));
}

inline Element operator-(const Element& a, const Element& b) {
    a.ring()->guard(a, b, "subtract");
    return a + (-b);
}

inline Element operator*(const Element& a, const Element& b) {
    a.ring()->guard(a, b, "multiply");
    return a.ring()->make(a.ring()->mul_payload(a.payload(), b.payload()));
}

inline bool operator==(const Element& a, const Element& b) {
    a.ring()->guard(a, b, "compare-equal");
    return payload_equal(a.payload(), b.payload());
}

inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }

inline Comparison compare(const Element& a, const Element& b) {
    a.ring()->guard(a, b, "compare");
    return a.ring()->compare_payload(a.payload(), b.payload());
}

// Nesting side of an iterated product. In a nonassociative ring the two
// bracketings of x^n genuinely differ.
enum class PowerDirection { RightNested, LeftNested };

inline const char* to_string(PowerDirection d) {
    return d == PowerDirection::RightNested ? "right" : "left";
}

// x^{->0} = 1 and x^{->(n+1)} = x * x^{->n}; the left-nested power
// multiplies on the other side.
inline Element oriented_power(const Element& x, unsigned n, PowerDirection dir) {
    Element acc = x.ring()->one();
    for (unsigned i = 0; i < n; ++i)
        acc = dir == PowerDirection::RightNested ? x * acc : acc * x;
    return acc;
}

} // namespace ogsr
