#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ogsr/seminorm.hpp"
#include "ogsr/topology.hpp"

namespace ogsr {

// Induced-topology ball: x is a member iff f(x - center) lands in the
// window, a basic open around zero in the target ring.
struct Ball {
    Seminorm spec;
    Element center;
    BasicOpen window;
};

namespace detail {

inline void require_window(const Seminorm& f, const BasicOpen& window, const char* where) {
    if (!f.target()->same_instance(*window.ring()))
        throw MixedRings(std::string(where) + ": window lives in " + window.ring()->name() +
                         ", seminorm targets " + f.target()->name());
    if (!window.contains(f.target()->zero()))
        throw PreconditionFailed(std::string(where) + ": window " + window.str() +
                                 " does not contain zero");
}

} // namespace detail

inline Ball make_ball(const Seminorm& f, const Element& center, const BasicOpen& window) {
    detail::require_window(f, window, "make_ball");
    if (!f.source()->same_instance(*center.ring()))
        throw MixedRings("make_ball: center from " + center.ring()->name());
    return Ball{f, center, window};
}

inline bool ball_contains(const Ball& b, const Element& x) {
    return b.window.contains(b.spec(x - b.center));
}

// Dyadic symmetric windows (-2^-j, 2^-j) for j = 0..max_j over a rational
// target; the default window family for Cauchy checks.
inline std::vector<BasicOpen> dyadic_windows(const RingPtr& target, unsigned max_j = 8) {
    std::vector<BasicOpen> out;
    for (unsigned j = 0; j <= max_j; ++j) {
        const Element r = target->make(Payload(pow2_neg(j)));
        out.push_back(BasicOpen::interval(-r, r));
    }
    return out;
}

// A window V'' whose ball around g'' sits inside both input balls: shift
// each input window back by the distance from its center to g'' and
// symmetrize. Convexity of the inputs then squeezes f(x - g) between 0
// and f(x - g'') + f(g'' - g).
inline BasicOpen refine_ball(const BasicOpen& v, const BasicOpen& vp, const Element& g,
                             const Element& gp, const Element& gpp, const Seminorm& f) {
    detail::require_window(f, v, "refine_ball");
    detail::require_window(f, vp, "refine_ball");
    const Element d1 = f(gpp - g);
    const Element d2 = f(gpp - gp);
    if (!v.contains(d1) || !vp.contains(d2))
        throw PreconditionFailed("refine_ball: " + gpp.str() +
                                 " is not in the intersection of the input balls");
    const BasicOpen t1 = v.translated(-d1);
    const BasicOpen t2 = vp.translated(-d2);
    return t1.intersect(t1.negated()).intersect(t2).intersect(t2.negated());
}

// Sampled check of the abelian quasi-topology laws:
//   x ∈ a + B_V(g)  iff  x ∈ B_V(g + a)
//   x ∈ -B_V(g)     iff  x ∈ B_V(-g)      (uses evenness of f)
struct BallLawReport {
    std::string seminorm;
    std::string instance;
    unsigned samples = 0;
    std::uint64_t seed = 0;
    std::vector<CheckLine> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }

    std::string to_report() const {
        std::string out;
        out += "ball-laws: " + seminorm + " on " + instance + "\n";
        out += "samples: " + std::to_string(samples) + "\n";
        for (const auto& c : checks) out += render_check("check", c) + "\n";
        out += std::string("result: ") + (all_passed() ? "pass" : "fail") + "\n";
        return out;
    }
};

inline BallLawReport ball_translation_law(const Seminorm& f, const Element& a, const Element& g,
                                          const BasicOpen& v, unsigned samples = 1000,
                                          std::uint64_t seed = 0) {
    detail::require_window(f, v, "ball_translation_law");
    BallLawReport report;
    report.seminorm = f.name();
    report.instance = f.source()->name();
    report.samples = samples;
    report.seed = seed;

    detail::LawTracker translation("ball-translation");
    detail::LawTracker negation("ball-negation");
    const Ball at_g{f, g, v};
    const Ball at_ga{f, g + a, v};
    const Ball at_ng{f, -g, v};

    Sampler s(seed);
    for (unsigned i = 0; i < samples; ++i) {
        const Element x = f.source()->sample(s);
        auto w = [&] { return "x=" + x.str() + " a=" + a.str() + " g=" + g.str(); };
        translation.record(ball_contains(at_g, x - a) == ball_contains(at_ga, x), w);
        negation.record(ball_contains(at_g, -x) == ball_contains(at_ng, x), w);
    }
    report.checks = {translation.line(), negation.line()};
    return report;
}

// A window V' with f(x - r) ∈ V' implying f(ax - ar) ∈ V. Three paths:
// f(a) = 0 needs nothing, f(a) <= 1 keeps V, and otherwise V is scaled
// down by f(a), which requires exact division in the target.
struct ModulusResult {
    BasicOpen window;
    std::string path;

    std::string to_report() const { return "modulus: " + window.str() + "\npath: " + path + "\n"; }
};

inline ModulusResult multiplication_modulus(const Seminorm& f, const Element& a,
                                            const BasicOpen& v) {
    detail::require_window(f, v, "multiplication_modulus");
    const Element fa = f(a);
    const Element one = f.target()->one();
    if (fa == f.target()->zero())
        return {BasicOpen::whole(f.target()), "whole-space (f(a) = 0)"};
    if (cmp_leq(compare(fa, one))) return {v, "unchanged (f(a) <= 1)"};
    if (f.target()->carrier() != Carrier::Rationals)
        throw NoModulus("f(a) = " + fa.str() + " exceeds 1 and " + f.target()->name() +
                        " has no exact division");
    BasicOpen scaled(f.target());
    for (const auto& sub : v.excluded()) {
        const Element b = f.target()->make(Payload(sub.bound.rat() / fa.rat()));
        if (sub.kind == BoundKind::DownSet)
            scaled.exclude_down(b);
        else
            scaled.exclude_up(b);
    }
    return {scaled, "scaled (by 1/f(a))"};
}

// Separating window for two distinct points under a norm: half the
// distance eps = f(a-b) on each side. Disjointness is certified by the
// triangle inequality, with sampling as a smoke test only.
struct HausdorffWitness {
    BasicOpen window;
    Element separation;
    std::string certificate;
    unsigned sampled = 0;
    bool sampled_disjoint = true;

    std::string to_report() const {
        std::string out;
        out += "separation-value: " + separation.str() + "\n";
        out += "window: " + window.str() + "\n";
        out += "certificate: " + certificate + "\n";
        out += "sampled: " + std::to_string(sampled) + " disjoint: " +
               (sampled_disjoint ? "yes" : "no") + "\n";
        return out;
    }
};

inline HausdorffWitness hausdorff_witness(const Seminorm& f, const Element& a, const Element& b,
                                          unsigned samples = 10000, std::uint64_t seed = 0) {
    if (f.target()->carrier() != Carrier::Rationals)
        throw UnsupportedRing("hausdorff_witness needs a totally ordered divisible target, not " +
                              f.target()->name());
    if (a == b) throw PreconditionFailed("hausdorff_witness: the two points coincide");
    const Element eps = f(a - b);
    if (eps == f.target()->zero())
        throw NotDefinite("f(" + (a - b).str() + ") = 0 although " + a.str() + " != " + b.str() +
                          ": the seminorm is not a norm, no separation exists");

    const Element half = f.target()->make(Payload(eps.rat() / 2));
    HausdorffWitness w{BasicOpen::interval(-half, half), eps, "", samples, true};
    w.certificate = "any x in both balls would give f(a-b) <= f(x-a) + f(x-b) < " + half.str() +
                    " + " + half.str() + " = " + eps.str() + " = f(a-b), impossible";

    const Ball ball_a{f, a, w.window};
    const Ball ball_b{f, b, w.window};
    Sampler s(seed);
    for (unsigned i = 0; i < samples; ++i) {
        const Element x = f.source()->sample(s);
        if (ball_contains(ball_a, x) && ball_contains(ball_b, x)) {
            w.sampled_disjoint = false;
            break;
        }
    }
    return w;
}

// Cauchy detection on a finite prefix: for each window, the least index
// from which all pairwise differences (both orders) measure inside the
// window, provided at least one pair remains past it.
struct CauchyEntry {
    std::string window_text;
    bool admits = false;
    std::size_t stabilizes_at = 0;
};

struct CauchyReport {
    std::string seminorm;
    std::string instance;
    std::size_t prefix_length = 0;
    std::vector<CauchyEntry> windows;

    bool passed() const {
        for (const auto& w : windows)
            if (!w.admits) return false;
        return true;
    }

    std::string to_report() const {
        std::string out;
        out += "cauchy: " + seminorm + " on " + instance + "\n";
        out += "prefix-length: " + std::to_string(prefix_length) + "\n";
        for (std::size_t j = 0; j < windows.size(); ++j) {
            out += "window[" + std::to_string(j) + "]: " + windows[j].window_text;
            if (windows[j].admits)
                out += " stabilizes-at: " + std::to_string(windows[j].stabilizes_at) +
                       " status: cauchy\n";
            else
                out += " status: not-cauchy\n";
        }
        out += std::string("result: ") + (passed() ? "pass" : "fail") + "\n";
        return out;
    }
};

inline CauchyReport cauchy_check(const Seminorm& f, const std::vector<Element>& u,
                                 const std::vector<BasicOpen>& windows) {
    if (u.size() < 2) throw PreconditionFailed("cauchy_check needs a prefix of length >= 2");
    for (const auto& v : windows) detail::require_window(f, v, "cauchy_check");

    CauchyReport report;
    report.seminorm = f.name();
    report.instance = f.source()->name();
    report.prefix_length = u.size();

    for (const auto& v : windows) {
        std::size_t least = 0;
        for (std::size_t n = 0; n + 1 < u.size(); ++n)
            for (std::size_t m = n + 1; m < u.size(); ++m)
                if (!v.contains(f(u[n] - u[m])) || !v.contains(f(u[m] - u[n])))
                    least = std::max(least, n + 1);
        CauchyEntry entry;
        entry.window_text = v.str();
        entry.admits = least + 2 <= u.size();
        entry.stabilizes_at = least;
        report.windows.push_back(std::move(entry));
    }
    return report;
}

} // namespace ogsr
