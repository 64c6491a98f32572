#pragma once

#include <string>

#include "ogsr/detail/text.hpp"
#include "ogsr/ring.hpp"

namespace ogsr {

enum class PairOrder { Lexicographic, Componentwise };
enum class PairProduct { Componentwise, DualNumber };

// Pairs of rationals under a selectable order and product.
//   componentwise product: (a,b)(c,d) = (ac, bd), unit (1,1);
//   dual-number product:   (a,b)(c,d) = (ac, ad+bc), unit (1,0), so
//     (0,1) squares to zero.
// The lex order is total; the componentwise order leaves mixed-sign
// differences incomparable. Lex order + componentwise product is
// constructible but not order-compatible (products of positives can drop
// below zero); the compatibility checker exhibits this.
class PairRing final : public Ring {
public:
    PairRing(PairOrder order, PairProduct product) : order_(order), product_(product) {}

    std::string name() const override {
        std::string n = "pair:";
        n += order_ == PairOrder::Lexicographic ? "lex" : "cw";
        n += product_ == PairProduct::Componentwise ? ",cw" : ",dual";
        return n;
    }

    Carrier carrier() const override { return Carrier::Pair; }
    OrderKind order_kind() const override {
        return order_ == PairOrder::Lexicographic ? OrderKind::Lexicographic
                                                  : OrderKind::Componentwise;
    }
    bool divisible_by_integers() const override { return true; }

    PairProduct pair_product() const { return product_; }
    PairOrder pair_order() const { return order_; }

    Payload zero_payload() const override { return Coords{Rat(0), Rat(0)}; }
    Payload one_payload() const override {
        return product_ == PairProduct::Componentwise ? Coords{Rat(1), Rat(1)}
                                                      : Coords{Rat(1), Rat(0)};
    }

    Payload add_payload(const Payload& a, const Payload& b) const override {
        const Coords& x = as_coords(a);
        const Coords& y = as_coords(b);
        return Coords{x[0] + y[0], x[1] + y[1]};
    }

    Payload neg_payload(const Payload& a) const override {
        const Coords& x = as_coords(a);
        return Coords{-x[0], -x[1]};
    }

    Payload mul_payload(const Payload& a, const Payload& b) const override {
        const Coords& x = as_coords(a);
        const Coords& y = as_coords(b);
        if (product_ == PairProduct::Componentwise) return Coords{x[0] * y[0], x[1] * y[1]};
        return Coords{x[0] * y[0], x[0] * y[1] + x[1] * y[0]};
    }

    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        const Coords& x = as_coords(a);
        const Coords& y = as_coords(b);
        if (order_ == PairOrder::Lexicographic) {
            if (x[0] != y[0]) return x[0] < y[0] ? Comparison::Less : Comparison::Greater;
            return compare_rat(x[1], y[1]);
        }
        Comparison c0 = compare_rat(x[0], y[0]);
        Comparison c1 = compare_rat(x[1], y[1]);
        if (c0 == Comparison::Equal) return c1;
        if (c1 == Comparison::Equal || c1 == c0) return c0;
        return Comparison::Incomparable;
    }

    Payload parse_payload(std::string_view text) const override {
        std::string_view body = detail::strip_brackets(text, '(', ')', "a pair (a,b)");
        auto parts = detail::split_top_level(body);
        if (parts.size() != 2)
            throw WrongArity(name() + ": expected 2 components, got " +
                             std::to_string(parts.size()));
        return Coords{parse_rat(parts[0]), parse_rat(parts[1])};
    }

    std::string render_payload(const Payload& p) const override {
        const Coords& x = as_coords(p);
        return "(" + render_rat(x[0]) + "," + render_rat(x[1]) + ")";
    }

    Payload sample_payload(Sampler& s) const override {
        return Coords{s.rational(9, 6), s.rational(9, 6)};
    }

    Payload sample_nonneg_payload(Sampler& s) const override {
        Coords x{s.rational(9, 6), s.rational(9, 6)};
        if (order_ == PairOrder::Componentwise) {
            x[0] = rat_abs(x[0]);
            x[1] = rat_abs(x[1]);
        } else {
            x[0] = rat_abs(x[0]);
            if (x[0] == 0) x[1] = rat_abs(x[1]);
        }
        return x;
    }

    std::optional<Payload> divide_by_int_payload(const Payload& a, const Int& n) const override {
        if (n == 0) return std::nullopt;
        const Coords& x = as_coords(a);
        return Payload(Coords{x[0] / Rat(n), x[1] / Rat(n)});
    }

private:
    PairOrder order_;
    PairProduct product_;
};

inline RingPtr make_pairs(PairOrder order, PairProduct product) {
    return std::make_shared<PairRing>(order, product);
}

} // namespace ogsr
