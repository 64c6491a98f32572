#pragma once

#include <string>

#include "ogsr/detail/coeffs.hpp"
#include "ogsr/ring.hpp"

namespace ogsr {

enum class PolyBase { Integers, Rationals };
enum class PolyOrder { Lexicographic, Antilexicographic };

// Univariate polynomials over the integers or rationals, ordered by the
// sign of one distinguished coefficient of the difference:
//   lexicographic: P >= 0 iff P = 0 or the highest-degree nonzero
//     coefficient is positive (1 - X < 0);
//   antilexicographic: P >= 0 iff P = 0 or the lowest-degree nonzero
//     coefficient is positive (1 - X > 0, and X has no integer multiple
//     reaching 1).
// Both are total. A degree guard aborts runaway computations.
class PolynomialRing final : public Ring {
public:
    PolynomialRing(PolyBase base, PolyOrder order, std::size_t degree_guard = 512)
        : base_(base), order_(order), guard_(degree_guard) {
        if (guard_ == 0) throw InvalidSpec("polynomial degree guard must be positive");
    }

    std::string name() const override {
        std::string n = "poly:";
        n += base_ == PolyBase::Integers ? "int" : "rat";
        n += order_ == PolyOrder::Lexicographic ? ",lex" : ",antilex";
        if (guard_ != 512) n += "," + std::to_string(guard_);
        return n;
    }

    Carrier carrier() const override { return Carrier::Polynomial; }
    OrderKind order_kind() const override {
        return order_ == PolyOrder::Lexicographic ? OrderKind::Lexicographic
                                                  : OrderKind::Antilexicographic;
    }
    bool divisible_by_integers() const override { return base_ == PolyBase::Rationals; }

    PolyOrder poly_order() const { return order_; }
    std::size_t degree_guard() const { return guard_; }

    Payload zero_payload() const override { return Coords{}; }
    Payload one_payload() const override { return Coords{Rat(1)}; }

    Payload add_payload(const Payload& a, const Payload& b) const override {
        return detail::add_coeffs(as_coords(a), as_coords(b));
    }
    Payload neg_payload(const Payload& a) const override {
        return detail::neg_coeffs(as_coords(a));
    }
    Payload mul_payload(const Payload& a, const Payload& b) const override {
        Coords out = detail::mul_coeffs(as_coords(a), as_coords(b));
        if (!out.empty() && out.size() - 1 > guard_)
            throw GrowthExceeded(name() + ": product degree " + std::to_string(out.size() - 1) +
                                 " exceeds guard " + std::to_string(guard_));
        return out;
    }

    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        Coords d = detail::add_coeffs(as_coords(a), detail::neg_coeffs(as_coords(b)));
        if (d.empty()) return Comparison::Equal;
        const Rat& pivot = order_ == PolyOrder::Lexicographic
                               ? d.back()
                               : d[detail::lowest_nonzero(d)];
        return pivot > 0 ? Comparison::Greater : Comparison::Less;
    }

    Payload parse_payload(std::string_view text) const override {
        Coords c = detail::parse_coeff_list(text, '[', ']', "a coefficient list [c0,c1,...]");
        if (c.size() > guard_ + 1)
            throw GrowthExceeded(name() + ": literal degree exceeds guard");
        check_base(c);
        detail::trim_coeffs(c);
        return c;
    }

    std::string render_payload(const Payload& p) const override {
        return detail::render_coeff_list(as_coords(p), '[', ']');
    }

    Payload sample_payload(Sampler& s) const override {
        const std::size_t deg = static_cast<std::size_t>(s.int_in(0, 4));
        Coords c(deg + 1, Rat(0));
        for (auto& q : c)
            q = base_ == PolyBase::Integers ? Rat(Int(s.int_in(-9, 9))) : s.rational(9, 6);
        detail::trim_coeffs(c);
        return c;
    }

    std::optional<Payload> divide_by_int_payload(const Payload& a, const Int& n) const override {
        if (n == 0 || base_ == PolyBase::Integers) return std::nullopt;
        Coords out = as_coords(a);
        for (auto& q : out) q /= Rat(n);
        return Payload(out);
    }

private:
    void check_base(const Coords& c) const {
        if (base_ != PolyBase::Integers) return;
        for (const Rat& q : c)
            if (!rat_is_integer(q))
                throw ParseError(name() + ": coefficient " + render_rat(q) + " is not an integer");
    }

    PolyBase base_;
    PolyOrder order_;
    std::size_t guard_;
};

inline RingPtr make_polynomials(PolyBase base, PolyOrder order, std::size_t guard = 512) {
    return std::make_shared<PolynomialRing>(base, order, guard);
}

} // namespace ogsr
