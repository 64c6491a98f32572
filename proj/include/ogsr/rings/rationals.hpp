#pragma once

#include "ogsr/ring.hpp"

namespace ogsr {

// Totally ordered field of arbitrary-precision rationals. The divisible
// scalar carrier: every midpoint/modulus construction lands here.
class RationalRing final : public Ring {
public:
    std::string name() const override { return "rationals"; }
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
        return Rat(as_rat(a) * as_rat(b));
    }

    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        return compare_rat(as_rat(a), as_rat(b));
    }

    Payload parse_payload(std::string_view text) const override { return parse_rat(text); }

    std::string render_payload(const Payload& p) const override { return render_rat(as_rat(p)); }

    Payload sample_payload(Sampler& s) const override { return s.rational(24, 12); }

    std::optional<Payload> divide_by_int_payload(const Payload& a, const Int& n) const override {
        if (n == 0) return std::nullopt;
        return Payload(Rat(as_rat(a) / Rat(n)));
    }
};

inline RingPtr make_rationals() { return std::make_shared<RationalRing>(); }

} // namespace ogsr
