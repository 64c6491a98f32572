#pragma once

#include <string>

#include "ogsr/ring.hpp"

namespace ogsr {

// Integers modulo p^N for a prime p. Finite characteristic admits no
// compatible nontrivial order, so the instance carries the discrete one
// (x <= y iff x = y, the order generated by the empty cone) and declares
// 1 >= 0 false; these rings enter the theory through a valuation seminorm
// into the rationals, not through their order. v(x) is the largest k <= N
// with p^k dividing the representative, v(0) = N.
class ResidueRing final : public Ring {
public:
    ResidueRing(const Int& p, unsigned exponent) : p_(p), n_(exponent), m_(int_pow(p, exponent)) {
        if (!is_small_prime(p_)) throw InvalidSpec("residue base " + p_.str() + " is not prime");
        if (n_ == 0) throw InvalidSpec("residue exponent must be at least 1");
    }

    std::string name() const override { return "padic:" + p_.str() + "," + std::to_string(n_); }
    Carrier carrier() const override { return Carrier::Residue; }
    OrderKind order_kind() const override { return OrderKind::ConeGenerated; }
    bool declares_one_nonneg() const override { return false; }

    const Int& prime() const { return p_; }
    unsigned exponent() const { return n_; }
    const Int& modulus() const { return m_; }

    Payload zero_payload() const override { return Rat(0); }
    Payload one_payload() const override { return Rat(1); }

    Payload add_payload(const Payload& a, const Payload& b) const override {
        return reduce(rat_num(as_rat(a)) + rat_num(as_rat(b)));
    }
    Payload neg_payload(const Payload& a) const override { return reduce(-rat_num(as_rat(a))); }
    Payload mul_payload(const Payload& a, const Payload& b) const override {
        return reduce(rat_num(as_rat(a)) * rat_num(as_rat(b)));
    }

    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        return as_rat(a) == as_rat(b) ? Comparison::Equal : Comparison::Incomparable;
    }

    Payload parse_payload(std::string_view text) const override { return reduce(parse_int(text)); }

    std::string render_payload(const Payload& p) const override {
        return render_int(rat_num(as_rat(p)));
    }

    Payload sample_payload(Sampler& s) const override { return Rat(s.big_below(m_)); }

    Payload sample_nonneg_payload(Sampler&) const override {
        // Only zero is comparable to zero under the discrete order.
        return zero_payload();
    }

    std::optional<Int> ord_payload(const Payload& p) const override {
        Int x = rat_num(as_rat(p));
        if (x == 0) return Int(n_);
        Int v = 0;
        while (v < n_ && x % p_ == 0) {
            x /= p_;
            ++v;
        }
        return v;
    }

private:
    Payload reduce(Int x) const {
        x %= m_;
        if (x < 0) x += m_;
        return Rat(x);
    }

    Int p_;
    unsigned n_;
    Int m_;
};

inline RingPtr make_residues(const Int& p, unsigned exponent) {
    return std::make_shared<ResidueRing>(p, exponent);
}

} // namespace ogsr
