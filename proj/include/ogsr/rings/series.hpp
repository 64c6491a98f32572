#pragma once

#include <string>

#include "ogsr/detail/coeffs.hpp"
#include "ogsr/ring.hpp"

namespace ogsr {

// Rational coefficients modulo X^N: the finite stand-in for a complete
// series ring, where completeness questions become exact termination
// (X is nilpotent of index N). ord(x) is the lowest nonzero degree with
// the convention ord(0) = N; the order compares the coefficient at ord of
// the difference, which is total and compatible with the product.
class TruncatedSeriesRing final : public Ring {
public:
    explicit TruncatedSeriesRing(std::size_t precision) : n_(precision) {
        if (n_ == 0) throw InvalidSpec("series precision must be at least 1");
    }

    std::string name() const override { return "series:" + std::to_string(n_); }
    Carrier carrier() const override { return Carrier::TruncatedSeries; }
    OrderKind order_kind() const override { return OrderKind::Antilexicographic; }
    bool divisible_by_integers() const override { return true; }

    std::size_t precision() const { return n_; }

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
        if (out.size() > n_) out.resize(n_);
        detail::trim_coeffs(out);
        return out;
    }

    Comparison compare_payload(const Payload& a, const Payload& b) const override {
        Coords d = detail::add_coeffs(as_coords(a), detail::neg_coeffs(as_coords(b)));
        if (d.empty()) return Comparison::Equal;
        return d[detail::lowest_nonzero(d)] > 0 ? Comparison::Greater : Comparison::Less;
    }

    Payload parse_payload(std::string_view text) const override {
        Coords c = detail::parse_coeff_list(text, '[', ']', "a coefficient list [c0,c1,...]");
        if (c.size() > n_)
            throw WrongArity(name() + ": literal has " + std::to_string(c.size()) +
                             " coefficients, precision is " + std::to_string(n_));
        detail::trim_coeffs(c);
        return c;
    }

    std::string render_payload(const Payload& p) const override {
        return detail::render_coeff_list(as_coords(p), '[', ']');
    }

    Payload sample_payload(Sampler& s) const override {
        const std::size_t len =
            static_cast<std::size_t>(s.int_in(0, static_cast<std::int64_t>(std::min(n_, std::size_t(5)))));
        Coords c(len, Rat(0));
        for (auto& q : c) q = s.rational(9, 6);
        detail::trim_coeffs(c);
        return c;
    }

    std::optional<Int> ord_payload(const Payload& p) const override {
        const Coords& c = as_coords(p);
        if (c.empty()) return Int(n_);
        return Int(detail::lowest_nonzero(c));
    }

    std::optional<Payload> divide_by_int_payload(const Payload& a, const Int& n) const override {
        if (n == 0) return std::nullopt;
        Coords out = as_coords(a);
        for (auto& q : out) q /= Rat(n);
        return Payload(out);
    }

private:
    std::size_t n_;
};

inline RingPtr make_series(std::size_t precision) {
    return std::make_shared<TruncatedSeriesRing>(precision);
}

} // namespace ogsr
