#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ogsr/ring.hpp"

namespace ogsr {

// One sampled law: either it held on every draw or the first witness is
// recorded, already rendered.
struct CheckLine {
    std::string name;
    bool passed = true;
    std::string witness;
};

inline std::string render_check(const char* prefix, const CheckLine& line) {
    std::string out = std::string(prefix) + ": " + line.name + " = ";
    out += line.passed ? "pass" : "fail";
    if (!line.passed && !line.witness.empty()) out += " witness: " + line.witness;
    return out;
}

namespace detail {

class LawTracker {
public:
    explicit LawTracker(std::string name) { line_.name = std::move(name); }

    void record(bool ok, const std::function<std::string()>& witness) {
        if (!ok && line_.passed) {
            line_.passed = false;
            line_.witness = witness();
        }
    }

    const CheckLine& line() const { return line_; }

private:
    CheckLine line_;
};

} // namespace detail

// Sampled verdicts over the additive-group, distributivity and unit laws.
// Associativity and commutativity of multiplication are reported as
// observations, not requirements: the theory is about rings where they
// may genuinely be absent.
struct AxiomReport {
    std::string instance;
    unsigned samples = 0;
    std::uint64_t seed = 0;
    std::vector<CheckLine> axioms;
    std::vector<CheckLine> observations;

    bool all_passed() const {
        for (const auto& a : axioms)
            if (!a.passed) return false;
        return true;
    }

    std::string to_report() const {
        std::string out;
        out += "axioms: " + instance + "\n";
        out += "samples: " + std::to_string(samples) + "\n";
        out += "seed: " + std::to_string(seed) + "\n";
        for (const auto& a : axioms) out += render_check("axiom", a) + "\n";
        for (const auto& o : observations)
            out += "note: " + o.name + " = " + (o.passed ? "present" : "absent") + "\n";
        out += std::string("result: ") + (all_passed() ? "pass" : "fail") + "\n";
        return out;
    }
};

inline AxiomReport check_ring_axioms(const RingPtr& ring, unsigned samples = 1000,
                                     std::uint64_t seed = 0) {
    AxiomReport report;
    report.instance = ring->name();
    report.samples = samples;
    report.seed = seed;

    detail::LawTracker add_comm("add-commutative");
    detail::LawTracker add_assoc("add-associative");
    detail::LawTracker add_ident("add-identity");
    detail::LawTracker add_inv("add-inverse");
    detail::LawTracker dist_l("mul-left-distributive");
    detail::LawTracker dist_r("mul-right-distributive");
    detail::LawTracker unit_ident("unit-identity");
    detail::LawTracker mul_assoc("mul-associative");
    detail::LawTracker mul_comm("mul-commutative");

    Sampler s(seed);
    const Element zero = ring->zero();
    const Element one = ring->one();
    for (unsigned i = 0; i < samples; ++i) {
        const Element x = ring->sample(s);
        const Element y = ring->sample(s);
        const Element z = ring->sample(s);
        auto w2 = [&] { return "x=" + x.str() + " y=" + y.str(); };
        auto w3 = [&] { return "x=" + x.str() + " y=" + y.str() + " z=" + z.str(); };
        auto w1 = [&] { return "x=" + x.str(); };

        add_comm.record(x + y == y + x, w2);
        add_assoc.record((x + y) + z == x + (y + z), w3);
        add_ident.record(x + zero == x && zero + x == x, w1);
        add_inv.record(x + (-x) == zero, w1);
        dist_l.record(x * (y + z) == x * y + x * z, w3);
        dist_r.record((x + y) * z == x * z + y * z, w3);
        unit_ident.record(one * x == x && x * one == x, w1);
        mul_assoc.record((x * y) * z == x * (y * z), w3);
        mul_comm.record(x * y == y * x, w2);
    }

    report.axioms = {add_comm.line(), add_assoc.line(), add_ident.line(),
                     add_inv.line(),  dist_l.line(),    dist_r.line(),
                     unit_ident.line()};
    report.observations = {mul_assoc.line(), mul_comm.line()};
    return report;
}

// Sampled verdicts over the order laws: that compare is a partial order,
// that it is translation invariant, and that the positive cone is closed
// under multiplication on both sides. 1 >= 0 is checked only when the
// instance declares it.
struct OrderReport {
    std::string instance;
    unsigned samples = 0;
    std::uint64_t seed = 0;
    std::vector<CheckLine> checks;
    bool declares_one_nonneg = true;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::string to_report() const {
        std::string out;
        out += "order: " + instance + "\n";
        out += "samples: " + std::to_string(samples) + "\n";
        out += "seed: " + std::to_string(seed) + "\n";
        out += std::string("declares-one-geq-zero: ") + (declares_one_nonneg ? "true" : "false") +
               "\n";
        for (const auto& c : checks) out += render_check("check", c) + "\n";
        out += std::string("result: ") + (all_passed() ? "pass" : "fail") + "\n";
        return out;
    }
};

inline OrderReport check_order_compatibility(const RingPtr& ring, unsigned samples = 1000,
                                             std::uint64_t seed = 0) {
    OrderReport report;
    report.instance = ring->name();
    report.samples = samples;
    report.seed = seed;
    report.declares_one_nonneg = ring->declares_one_nonneg();

    detail::LawTracker reflexive("compare-reflexive");
    detail::LawTracker antisym("compare-antisymmetric");
    detail::LawTracker transitive("compare-transitive");
    detail::LawTracker translation("translation-invariance");
    detail::LawTracker cone("cone-product-closure");
    detail::LawTracker one_pos("one-geq-zero");

    Sampler s(seed);
    const Element zero = ring->zero();

    if (ring->declares_one_nonneg()) {
        one_pos.record(cmp_geq(compare(ring->one(), zero)),
                       [&] { return "compare(1,0) = " +
                                    std::string(to_string(compare(ring->one(), zero))); });
    }

    for (unsigned i = 0; i < samples; ++i) {
        const Element x = ring->sample(s);
        const Element y = ring->sample(s);
        const Element z = ring->sample(s);
        auto w2 = [&] { return "x=" + x.str() + " y=" + y.str(); };
        auto w3 = [&] { return "x=" + x.str() + " y=" + y.str() + " z=" + z.str(); };

        reflexive.record(compare(x, x) == Comparison::Equal, [&] { return "x=" + x.str(); });
        antisym.record(compare(x, y) == cmp_reversed(compare(y, x)), w2);
        if (cmp_leq(compare(x, y)) && cmp_leq(compare(y, z)))
            transitive.record(cmp_leq(compare(x, z)), w3);
        translation.record(compare(x, y) == compare(x + z, y + z), w3);

        // Positives drawn two ways: filtered general samples (catches
        // cones that admit mixed-sign coordinates) and direct cone draws.
        const Element p = cmp_geq(compare(x, zero)) ? x : ring->sample_nonneg(s);
        const Element q = cmp_geq(compare(y, zero)) ? y : ring->sample_nonneg(s);
        auto wc = [&] {
            return "p=" + p.str() + " q=" + q.str() + " pq=" + (p * q).str() + " qp=" +
                   (q * p).str();
        };
        cone.record(cmp_geq(compare(p * q, zero)) && cmp_geq(compare(q * p, zero)), wc);
    }

    report.checks = {reflexive.line(), antisym.line(), transitive.line(), translation.line(),
                     cone.line()};
    if (ring->declares_one_nonneg()) report.checks.push_back(one_pos.line());
    return report;
}

// Convexity of a membership predicate along supplied chains x <= y <= z:
// if the ends are members the middle must be. Chains that are not chains
// are the caller's bug, hence the MalformedTriple error.
struct ConvexityResult {
    bool passed = true;
    std::size_t violating_triple = 0;
    std::string witness;
};

inline ConvexityResult is_convex_sampled(const std::function<bool(const Element&)>& member,
                                         const std::vector<std::array<Element, 3>>& triples) {
    for (std::size_t i = 0; i < triples.size(); ++i) {
        const auto& [x, y, z] = triples[i];
        if (!cmp_leq(compare(x, y)) || !cmp_leq(compare(y, z)))
            throw MalformedTriple("triple " + std::to_string(i) + " is not a chain: x=" + x.str() +
                                      " y=" + y.str() + " z=" + z.str(),
                                  i);
        if (member(x) && member(z) && !member(y))
            return {false, i, "x=" + x.str() + " y=" + y.str() + " z=" + z.str()};
    }
    return {};
}

} // namespace ogsr
