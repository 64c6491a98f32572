#pragma once

#include "ogsr/ring.hpp"

namespace ogsr {

// Totally ordered ring of arbitrary-precision integers. Payloads are
// rationals whose denominator is pinned to one.
class IntegerRing final : public Ring {
public:
    std::string name() const override { return "integers"; }
    Carrier carrier() const override { return Carrier::Integers; }
    OrderKind order_kind() const override { return OrderKind::Total; }

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

    Payload parse_payload(std::string_view text) const override {
        return Rat(parse_int(text));
    }

    std::string render_payload(const Payload& p) const override {
        return render_int(rat_num(as_rat(p)));
    }

    Payload sample_payload(Sampler& s) const override {
        return Rat(Int(s.int_in(-30, 30)));
    }
};

inline RingPtr make_integers() { return std::make_shared<IntegerRing>(); }

} // namespace ogsr
