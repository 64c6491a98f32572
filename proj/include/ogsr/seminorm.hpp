#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ogsr/axioms.hpp"
#include "ogsr/registry.hpp"
#include "ogsr/rings/rationals.hpp"

namespace ogsr {

// A seminorm candidate from a source ring into a partially ordered target
// ring, with the axioms it claims to satisfy. Claims are verified by
// sampling in check_seminorm_axioms; a spec claiming (and passing)
// everything including definiteness qualifies as a norm.
class Seminorm {
public:
    struct Claims {
        bool subadditive = true;
        bool even = true;
        bool submultiplicative = true;
        bool nonnegative = true;
        bool definite = true;
        bool unit_bounded = true;
    };

    Seminorm(std::string name, RingPtr source, RingPtr target,
             std::function<Element(const Element&)> map, Claims claims)
        : name_(std::move(name)),
          source_(std::move(source)),
          target_(std::move(target)),
          map_(std::move(map)),
          claims_(claims) {}

    const std::string& name() const { return name_; }
    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const Claims& claims() const { return claims_; }

    Element operator()(const Element& x) const {
        if (!source_->same_instance(*x.ring()))
            throw MixedRings("seminorm " + name_ + " expects elements of " + source_->name() +
                             ", got " + x.ring()->name());
        return map_(x);
    }

    bool claims_norm() const {
        return claims_.subadditive && claims_.even && claims_.submultiplicative &&
               claims_.nonnegative && claims_.definite && claims_.unit_bounded;
    }

private:
    std::string name_;
    RingPtr source_;
    RingPtr target_;
    std::function<Element(const Element&)> map_;
    Claims claims_;
};

inline std::vector<std::string> known_seminorms() {
    return {"abs", "ord2", "padic", "const-term"};
}

// Named seminorms over the shipped instances. The target is always the
// rational field. Vanishing arguments map to exactly zero; for the
// valuation-based maps this is what keeps submultiplicativity honest when
// truncation kills a product.
inline Seminorm make_seminorm(const std::string& name, const RingPtr& source) {
    const RingPtr target = make_rationals();
    if (name == "abs") {
        if (source->carrier() != Carrier::Rationals && source->carrier() != Carrier::Integers)
            throw InvalidSpec("abs expects a numeric carrier, got " + source->name());
        auto map = [target](const Element& x) { return target->make(Payload(rat_abs(x.rat()))); };
        return Seminorm("abs", source, target, map, Seminorm::Claims{});
    }
    if (name == "ord2") {
        if (source->carrier() != Carrier::TruncatedSeries)
            throw InvalidSpec("ord2 expects a truncated-series carrier, got " + source->name());
        auto map = [target](const Element& x) {
            if (x.is_zero()) return target->zero();
            return target->make(Payload(pow2_neg(ord_valuation(x).convert_to<unsigned>())));
        };
        return Seminorm("ord2", source, target, map, Seminorm::Claims{});
    }
    if (name == "padic") {
        if (source->carrier() != Carrier::Residue)
            throw InvalidSpec("padic expects a residue carrier, got " + source->name());
        auto map = [target, source](const Element& x) {
            if (x.is_zero()) return target->zero();
            return target->make(
                Payload(pow_neg(residue_prime(source), ord_valuation(x).convert_to<unsigned>())));
        };
        return Seminorm("padic", source, target, map, Seminorm::Claims{});
    }
    if (name == "const-term") {
        if (source->carrier() != Carrier::TruncatedSeries)
            throw InvalidSpec("const-term expects a truncated-series carrier, got " +
                              source->name());
        auto map = [target](const Element& x) {
            const Coords& c = x.coords();
            return target->make(Payload(c.empty() ? Rat(0) : rat_abs(c[0])));
        };
        Seminorm::Claims claims;
        claims.definite = false;
        return Seminorm("const-term", source, target, map, claims);
    }
    throw InvalidSpec("unknown seminorm '" + name + "'");
}

// Sampled verification of every claimed flag; unclaimed flags are still
// probed and reported as observations so genuine counter-instances (a
// seminorm that is not a norm) stay visible.
struct SeminormReport {
    std::string seminorm;
    std::string instance;
    unsigned samples = 0;
    std::uint64_t seed = 0;
    std::vector<CheckLine> claimed;
    std::vector<CheckLine> observed;

    bool all_passed() const {
        for (const auto& c : claimed)
            if (!c.passed) return false;
        return true;
    }

    bool qualifies_as_norm(const Seminorm& f) const { return f.claims_norm() && all_passed(); }

    std::string to_report() const {
        std::string out;
        out += "seminorm: " + seminorm + " on " + instance + "\n";
        out += "samples: " + std::to_string(samples) + "\n";
        out += "seed: " + std::to_string(seed) + "\n";
        for (const auto& c : claimed) out += render_check("claim", c) + "\n";
        for (const auto& o : observed) {
            out += "note: " + o.name + " = " + (o.passed ? "present" : "absent");
            if (!o.passed && !o.witness.empty()) out += " witness: " + o.witness;
            out += "\n";
        }
        out += std::string("result: ") + (all_passed() ? "pass" : "fail") + "\n";
        return out;
    }
};

inline SeminormReport check_seminorm_axioms(const Seminorm& f, unsigned samples = 1000,
                                            std::uint64_t seed = 0) {
    if (samples < 1) throw PreconditionFailed("check_seminorm_axioms needs at least one sample");
    SeminormReport report;
    report.seminorm = f.name();
    report.instance = f.source()->name();
    report.samples = samples;
    report.seed = seed;

    detail::LawTracker subadd("subadditive");
    detail::LawTracker even("even");
    detail::LawTracker submul("submultiplicative");
    detail::LawTracker nonneg("nonnegative");
    detail::LawTracker definite("definite");
    detail::LawTracker unit("unit-bounded");

    const RingPtr& source = f.source();
    const Element tzero = f.target()->zero();
    const Element tone = f.target()->one();

    unit.record(cmp_leq(compare(f(source->one()), tone)),
                [&] { return "f(1)=" + f(source->one()).str(); });
    definite.record(f(source->zero()) == tzero, [&] { return "f(0)=" + f(source->zero()).str(); });

    Sampler s(seed);
    for (unsigned i = 0; i < samples; ++i) {
        const Element x = source->sample(s);
        const Element y = source->sample(s);
        const Element fx = f(x);
        const Element fy = f(y);
        auto w2 = [&] {
            return "x=" + x.str() + " y=" + y.str() + " f(x)=" + fx.str() + " f(y)=" + fy.str();
        };
        auto w1 = [&] { return "x=" + x.str() + " f(x)=" + fx.str(); };

        subadd.record(cmp_leq(compare(f(x + y), fx + fy)), w2);
        even.record(f(-x) == fx, w1);
        submul.record(cmp_leq(compare(f(x * y), fx * fy)), w2);
        nonneg.record(cmp_geq(compare(fx, tzero)), w1);
        if (!x.is_zero()) definite.record(!(fx == tzero), w1);
    }

    const Seminorm::Claims& c = f.claims();
    auto place = [&](bool claimed, const detail::LawTracker& t) {
        (claimed ? report.claimed : report.observed).push_back(t.line());
    };
    place(c.subadditive, subadd);
    place(c.even, even);
    place(c.submultiplicative, submul);
    place(c.nonnegative, nonneg);
    place(c.definite, definite);
    place(c.unit_bounded, unit);
    return report;
}

} // namespace ogsr
