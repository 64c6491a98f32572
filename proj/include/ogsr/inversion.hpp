#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ogsr/balls.hpp"
#include "ogsr/ring.hpp"
#include "ogsr/seminorm.hpp"
#include "ogsr/topology.hpp"

namespace ogsr {

enum class InversionStatus { ExactInverse, ConvergentEvidence, HypothesisFailed, BudgetExhausted };

inline const char* to_string(InversionStatus s) {
    switch (s) {
    case InversionStatus::ExactInverse: return "ExactInverse";
    case InversionStatus::ConvergentEvidence: return "ConvergentEvidence";
    case InversionStatus::HypothesisFailed: return "HypothesisFailed";
    case InversionStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

enum class Direction { Right, Left, TwoSided };

inline const char* to_string(Direction d) {
    switch (d) {
    case Direction::Right: return "right";
    case Direction::Left: return "left";
    case Direction::TwoSided: return "two-sided";
    }
    return "?";
}

struct HypothesisEntry {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct TraceEntry {
    std::size_t n = 0;
    Element value;
};

// Everything a run is willing to claim, and no more: exact termination is
// asserted by multiplication, convergence claims are relative to the
// family or windows actually supplied, and failed hypotheses carry their
// witnesses. The trace holds residual powers (ordered runs) or residual
// seminorm values (seminormed runs).
struct InversionCertificate {
    std::string instance;
    InversionStatus status = InversionStatus::BudgetExhausted;
    Direction direction = Direction::Right;
    std::size_t iterations = 0;
    std::optional<Element> inverse_candidate;
    std::vector<TraceEntry> residual_trace;
    std::optional<Element> witness_used;
    std::string witness_provenance;
    std::vector<HypothesisEntry> hypotheses;
    std::string path_note;

    std::string to_report() const {
        std::string out;
        out += "inversion: " + instance + "\n";
        out += std::string("direction: ") + to_string(direction) + "\n";
        out += std::string("status: ") + to_string(status) + "\n";
        out += "iterations: " + std::to_string(iterations) + "\n";
        if (witness_used)
            out += "witness: " + witness_used->str() + " (" + witness_provenance + ")\n";
        for (const auto& h : hypotheses) {
            out += "hypothesis: " + h.name + " = " + (h.passed ? "pass" : "fail");
            if (!h.detail.empty()) out += " (" + h.detail + ")";
            out += "\n";
        }
        if (inverse_candidate) out += "inverse: " + inverse_candidate->str() + "\n";
        if (!path_note.empty()) out += "path: " + path_note + "\n";
        const std::size_t head = 32;
        for (std::size_t i = 0; i < residual_trace.size(); ++i) {
            if (i >= head && i + 1 < residual_trace.size()) {
                out += "trace: ... (" + std::to_string(residual_trace.size() - head - 1) +
                       " entries elided)\n";
                i = residual_trace.size() - 1;
            }
            out += "trace[" + std::to_string(residual_trace[i].n) +
                   "]: " + residual_trace[i].value.str() + "\n";
        }
        return out;
    }
};

// Doubling search for an integer witness c = n·1 with n·x >= 1. An
// incomparable n·x is reported as its own status: in a partial order it
// is evidence about the instance, not mere budget exhaustion.
enum class WitnessSearchStatus { Found, NotFound, IncomparabilityHit };

inline const char* to_string(WitnessSearchStatus s) {
    switch (s) {
    case WitnessSearchStatus::Found: return "Found";
    case WitnessSearchStatus::NotFound: return "NotFound";
    case WitnessSearchStatus::IncomparabilityHit: return "IncomparabilityHit";
    }
    return "?";
}

struct WitnessSearch {
    WitnessSearchStatus status = WitnessSearchStatus::NotFound;
    std::optional<Element> witness;
    Int n = 0;

    std::string to_report() const {
        std::string out = std::string("witness-search: ") + to_string(status) + "\n";
        if (witness) out += "witness: " + witness->str() + " (n = " + n.str() + ")\n";
        else if (n != 0) out += "stopped-at: n = " + n.str() + "\n";
        return out;
    }
};

inline WitnessSearch archimedean_witness_search(const Element& x, const Int& budget) {
    const RingPtr& ring = x.ring();
    if (compare(x, ring->zero()) != Comparison::Greater)
        throw NotPositive("witness search needs x > 0, got x = " + x.str());
    WitnessSearch out;
    const Element one = ring->one();
    for (Int n = 1; n <= budget; n *= 2) {
        const Element nx = ring->from_int(n) * x;
        const Comparison c = compare(nx, one);
        out.n = n;
        if (cmp_geq(c)) {
            out.status = WitnessSearchStatus::Found;
            out.witness = ring->from_int(n);
            return out;
        }
        if (c == Comparison::Incomparable) {
            out.status = WitnessSearchStatus::IncomparabilityHit;
            return out;
        }
    }
    out.status = WitnessSearchStatus::NotFound;
    return out;
}

namespace detail {

inline HypothesisEntry check_cmp(const std::string& name, const Element& lhs, const Element& rhs,
                                 bool (*ok)(Comparison), const std::string& what) {
    const Comparison c = compare(lhs, rhs);
    HypothesisEntry h{name, ok(c), what + " = " + std::string(to_string(c))};
    if (!h.passed) h.detail += ", lhs = " + lhs.str();
    return h;
}

inline bool all_passed(const std::vector<HypothesisEntry>& hs) {
    for (const auto& h : hs)
        if (!h.passed) return false;
    return true;
}

// Convergence evidence on a residual-power trace: every neighbour pair
// comparable and weakly decreasing, and every family element is reached.
inline bool trace_decreasing_below_family(const std::vector<TraceEntry>& trace,
                                          const std::vector<Element>& family) {
    if (family.empty() || trace.empty()) return false;
    for (std::size_t i = 1; i < trace.size(); ++i)
        if (!cmp_geq(compare(trace[i - 1].value, trace[i].value))) return false;
    for (const Element& eps : family) {
        bool reached = false;
        for (const auto& t : trace)
            if (cmp_leq(compare(t.value, eps))) {
                reached = true;
                break;
            }
        if (!reached) return false;
    }
    return true;
}

} // namespace detail

// Oriented geometric series under an order witness c: s accumulates the
// oriented powers of y = 1 - x while the proof's invariants are asserted
// at every step (recurrence, monotonicity, the bound s <= c). Exact
// termination is certified by multiplying back; anything else is either
// convergence evidence against the supplied family or budget exhaustion.
inline InversionCertificate invert_ordered(const Element& x, const Element& c,
                                           PowerDirection direction, std::size_t budget,
                                           const std::vector<Element>& comparison_family = {},
                                           const std::string& witness_provenance =
                                               "user-supplied") {
    if (budget < 1) throw PreconditionFailed("invert_ordered needs budget >= 1");
    const RingPtr& ring = x.ring();
    ring->guard(x, c, "invert-ordered");
    const bool right = direction == PowerDirection::RightNested;

    InversionCertificate cert;
    cert.instance = ring->name();
    cert.direction = right ? Direction::Right : Direction::Left;
    cert.witness_used = c;
    cert.witness_provenance = witness_provenance;

    const Element zero = ring->zero();
    const Element one = ring->one();
    cert.hypotheses.push_back({"one-geq-zero",
                               ring->declares_one_nonneg() && cmp_geq(compare(one, zero)),
                               ring->declares_one_nonneg() ? "compare(1, 0) = " +
                                       std::string(to_string(compare(one, zero)))
                                                           : "instance does not declare 1 >= 0"});
    cert.hypotheses.push_back(
        detail::check_cmp("x-positive", x, zero, [](Comparison q) { return q == Comparison::Greater; },
                          "compare(x, 0)"));
    cert.hypotheses.push_back(
        detail::check_cmp("x-leq-one", x, one, cmp_leq, "compare(x, 1)"));
    cert.hypotheses.push_back(detail::check_cmp(
        "witness-positive", c, zero, [](Comparison q) { return q == Comparison::Greater; },
        "compare(c, 0)"));
    cert.hypotheses.push_back(detail::check_cmp("witness-product", right ? x * c : c * x, one,
                                                cmp_geq,
                                                right ? "compare(x*c, 1)" : "compare(c*x, 1)"));
    if (!detail::all_passed(cert.hypotheses)) {
        cert.status = InversionStatus::HypothesisFailed;
        return cert;
    }

    const Element y = one - x;
    Element s = one;
    Element t = one;
    for (std::size_t n = 1; n <= budget; ++n) {
        t = right ? y * t : t * y;
        if (t == zero) {
            const Element product = right ? x * s : s * x;
            if (!(product == one))
                throw InvariantViolation("series terminated at step " + std::to_string(n) +
                                             " but the product check failed: " + product.str(),
                                         n);
            cert.status = InversionStatus::ExactInverse;
            cert.iterations = n;
            cert.inverse_candidate = s;
            return cert;
        }
        cert.residual_trace.push_back({n, t});
        // The budget caps the term count of the candidate (s already
        // holds one term); the last computed power is kept as evidence
        // without being added.
        if (n == budget) break;
        const Element s_next = s + t;
        const Element recurrence = right ? y * s + one : s * y + one;
        if (!(s_next == recurrence))
            throw InvariantViolation("recurrence s' = y*s + 1 broke at step " + std::to_string(n) +
                                         ": sum = " + s_next.str() + ", recurrence = " +
                                         recurrence.str(),
                                     n);
        if (!cmp_geq(compare(s_next, s)))
            throw InvariantViolation("partial sums stopped increasing at step " +
                                         std::to_string(n) + ": " + s.str() + " then " +
                                         s_next.str(),
                                     n);
        if (!cmp_leq(compare(s_next, c)))
            throw InvariantViolation("partial sum escaped the witness bound at step " +
                                         std::to_string(n) + ": s = " + s_next.str() + ", c = " +
                                         c.str(),
                                     n);
        s = s_next;
        if ((right ? x * s : s * x) == one) {
            cert.status = InversionStatus::ExactInverse;
            cert.iterations = n + 1;
            cert.inverse_candidate = s;
            return cert;
        }
    }

    cert.iterations = budget;
    cert.inverse_candidate = s;
    cert.status = detail::trace_decreasing_below_family(cert.residual_trace, comparison_family)
                      ? InversionStatus::ConvergentEvidence
                      : InversionStatus::BudgetExhausted;
    return cert;
}

// Both oriented series; exactness on both sides must agree on the
// candidate, which is then certified as a two-sided inverse.
inline InversionCertificate invert_two_sided(const Element& x, const Element& c_right,
                                             const Element& c_left, std::size_t budget,
                                             const std::vector<Element>& comparison_family = {}) {
    InversionCertificate right =
        invert_ordered(x, c_right, PowerDirection::RightNested, budget, comparison_family);
    InversionCertificate left =
        invert_ordered(x, c_left, PowerDirection::LeftNested, budget, comparison_family);

    InversionCertificate cert;
    cert.instance = right.instance;
    cert.direction = Direction::TwoSided;
    cert.iterations = std::max(right.iterations, left.iterations);
    cert.witness_used = right.witness_used;
    cert.witness_provenance = right.witness_provenance;
    for (auto& h : right.hypotheses) cert.hypotheses.push_back({"right " + h.name, h.passed, h.detail});
    for (auto& h : left.hypotheses) cert.hypotheses.push_back({"left " + h.name, h.passed, h.detail});
    cert.residual_trace = right.residual_trace;

    const bool both_exact = right.status == InversionStatus::ExactInverse &&
                            left.status == InversionStatus::ExactInverse;
    if (both_exact) {
        if (!(*right.inverse_candidate == *left.inverse_candidate))
            throw DirectionalMismatch("right inverse " + right.inverse_candidate->str() +
                                      " and left inverse " + left.inverse_candidate->str() +
                                      " both terminate exactly but differ");
        const Element inv = *right.inverse_candidate;
        const RingPtr& ring = x.ring();
        if (!(x * inv == ring->one()) || !(inv * x == ring->one()))
            throw InvariantViolation("two-sided product check failed for candidate " + inv.str(),
                                     cert.iterations);
        cert.status = InversionStatus::ExactInverse;
        cert.inverse_candidate = inv;
        return cert;
    }

    // Weakest status wins; hypothesis failures dominate everything.
    auto rank = [](InversionStatus s) {
        switch (s) {
        case InversionStatus::HypothesisFailed: return 0;
        case InversionStatus::BudgetExhausted: return 1;
        case InversionStatus::ConvergentEvidence: return 2;
        case InversionStatus::ExactInverse: return 3;
        }
        return 0;
    };
    cert.status = rank(right.status) <= rank(left.status) ? right.status : left.status;
    return cert;
}

// Seminormed inversion: the same series, but convergence is measured by
// f on the exactly recomputed residual r_n = 1 - x·u_n, against a window
// family. The limit-exchange justification (f(x) <= 1 or a scaled
// modulus) is recorded in path_note.
inline InversionCertificate invert_seminormed(const Element& x, const Seminorm& f,
                                              const std::vector<BasicOpen>& windows,
                                              std::size_t budget) {
    if (budget < 1) throw PreconditionFailed("invert_seminormed needs budget >= 1");
    const RingPtr& ring = x.ring();
    if (!f.source()->same_instance(*ring))
        throw MixedRings("invert_seminormed: x lives in " + ring->name() + ", seminorm reads " +
                         f.source()->name());
    for (const auto& v : windows) detail::require_window(f, v, "invert_seminormed");

    InversionCertificate cert;
    cert.instance = ring->name();
    cert.direction = Direction::Right;

    const RingPtr& target = f.target();
    const Element tzero = target->zero();
    const Element tone = target->one();
    cert.hypotheses.push_back({"target-one-geq-zero",
                               target->declares_one_nonneg() && cmp_geq(compare(tone, tzero)),
                               "compare(1, 0) in " + target->name() + " = " +
                                   std::string(to_string(compare(tone, tzero)))});

    const Element one = ring->one();
    const Element y = one - x;
    const Element gap = f(y);
    cert.hypotheses.push_back({"norm-gap", compare(gap, tone) == Comparison::Less,
                               "f(1-x) = " + gap.str()});
    if (!detail::all_passed(cert.hypotheses)) {
        cert.status = InversionStatus::HypothesisFailed;
        return cert;
    }

    const Element fx = f(x);
    cert.path_note =
        cmp_leq(compare(fx, tone))
            ? "limit exchange via the f(a) <= 1 continuity bound, f(x) = " + fx.str()
            : "limit exchange via the division-ring modulus, window scaled by 1/f(x), f(x) = " +
                  fx.str();

    std::vector<Element> u_trace;
    Element u = one;
    Element t = one;
    u_trace.push_back(u);
    Element r = one - x * u;
    cert.residual_trace.push_back({0, f(r)});
    if (r == ring->zero()) {
        cert.status = InversionStatus::ExactInverse;
        cert.iterations = 1;
        cert.inverse_candidate = u;
        return cert;
    }

    for (std::size_t n = 1; n < budget; ++n) {
        t = y * t;
        if (t == ring->zero()) break;
        u = u + t;
        u_trace.push_back(u);
        r = one - x * u;
        cert.residual_trace.push_back({n, f(r)});
        if (r == ring->zero()) {
            cert.status = InversionStatus::ExactInverse;
            cert.iterations = n + 1;
            cert.inverse_candidate = u;
            return cert;
        }
    }

    cert.iterations = u_trace.size();
    cert.inverse_candidate = u;

    // Tail membership per window, as in sup-limit checks.
    bool converges = !windows.empty();
    for (const auto& v : windows) {
        std::size_t first_inside_tail = cert.residual_trace.size();
        for (std::size_t i = cert.residual_trace.size(); i-- > 0;) {
            if (!v.contains(cert.residual_trace[i].value)) break;
            first_inside_tail = i;
        }
        if (first_inside_tail >= cert.residual_trace.size()) {
            converges = false;
            break;
        }
    }
    if (converges) {
        cert.status = InversionStatus::ConvergentEvidence;
        return cert;
    }

    if (u_trace.size() >= 2 && !windows.empty()) {
        const CauchyReport cauchy = cauchy_check(f, u_trace, windows);
        if (!cauchy.passed()) {
            std::size_t bad = 0;
            for (std::size_t j = 0; j < cauchy.windows.size(); ++j)
                if (!cauchy.windows[j].admits) {
                    bad = j;
                    break;
                }
            throw NotCauchy("partial sums are not Cauchy against window " + std::to_string(bad) +
                                " = " + cauchy.windows[bad].window_text + " at budget " +
                                std::to_string(budget),
                            bad);
        }
    }
    cert.status = InversionStatus::BudgetExhausted;
    return cert;
}

// Pointwise check of the vanishing-infimum hypothesis for oriented powers
// of x, with the fixed-point lemma as refutation: a positive a with
// x·a = a and a <= x bounds every power from below, so the infimum
// cannot be zero.
enum class InfPowerVerdict { Pass, FailFixedPoint, Inconclusive };

inline const char* to_string(InfPowerVerdict v) {
    switch (v) {
    case InfPowerVerdict::Pass: return "Pass";
    case InfPowerVerdict::FailFixedPoint: return "FailFixedPoint";
    case InfPowerVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct InfPowerFamilyEntry {
    std::string eps_text;
    bool achieved = false;
    std::size_t at = 0;
};

struct InfPowerReport {
    std::string instance;
    InfPowerVerdict verdict = InfPowerVerdict::Inconclusive;
    std::vector<InfPowerFamilyEntry> family;
    std::optional<Element> fixed_point;
    std::string note;

    std::string to_report() const {
        std::string out;
        out += "inf-power: " + instance + "\n";
        out += std::string("verdict: ") + to_string(verdict) + "\n";
        for (std::size_t k = 0; k < family.size(); ++k) {
            out += "family[" + std::to_string(k) + "]: eps = " + family[k].eps_text;
            if (family[k].achieved)
                out += " achieved-at: " + std::to_string(family[k].at) + "\n";
            else
                out += " not-achieved\n";
        }
        if (fixed_point) out += "fixed-point: " + fixed_point->str() + "\n";
        if (!note.empty()) out += "note: " + note + "\n";
        return out;
    }
};

inline InfPowerReport inf_power_zero_check(const Element& x, PowerDirection direction,
                                           const std::vector<Element>& comparison_family,
                                           std::size_t budget,
                                           const std::optional<Element>& candidate_bound =
                                               std::nullopt) {
    const RingPtr& ring = x.ring();
    const Element zero = ring->zero();
    const Element one = ring->one();
    if (!cmp_geq(compare(x, zero)) || !cmp_leq(compare(x, one)))
        throw PreconditionFailed("inf_power_zero_check needs 0 <= x <= 1 comparable, x = " +
                                 x.str());
    for (const Element& eps : comparison_family)
        if (compare(eps, zero) != Comparison::Greater)
            throw PreconditionFailed("comparison family must be positive, got " + eps.str());

    InfPowerReport report;
    report.instance = ring->name();
    const bool right = direction == PowerDirection::RightNested;

    std::vector<Element> powers;
    Element t = x;
    powers.push_back(t);
    std::optional<Element> discovered;
    for (std::size_t n = 2; n <= budget; ++n) {
        const Element next = right ? x * t : t * x;
        if (next == t && !(t == zero)) {
            discovered = t;
            break;
        }
        t = next;
        powers.push_back(t);
        if (t == zero) break;
    }

    for (const Element& eps : comparison_family) {
        InfPowerFamilyEntry entry;
        entry.eps_text = eps.str();
        for (std::size_t i = 0; i < powers.size(); ++i)
            if (cmp_leq(compare(powers[i], eps))) {
                entry.achieved = true;
                entry.at = i + 1;
                break;
            }
        report.family.push_back(std::move(entry));
    }

    // A supplied or discovered candidate refutes the hypothesis if it is
    // positive, fixed under x, and sits below x (hence below all powers).
    auto validate = [&](const Element& a, const char* origin) -> bool {
        if (compare(a, zero) != Comparison::Greater) return false;
        if (!((right ? x * a : a * x) == a)) return false;
        if (!cmp_leq(compare(a, x))) return false;
        for (const Element& p : powers)
            if (!cmp_leq(compare(a, p))) return false;
        report.fixed_point = a;
        report.note = std::string(origin) + " fixed point: x*a = a with a > 0, a <= x^n for all " +
                      "computed n, so the powers never reach 0";
        return true;
    };
    if (candidate_bound && validate(*candidate_bound, "supplied")) {
        report.verdict = InfPowerVerdict::FailFixedPoint;
        return report;
    }
    if (discovered && validate(*discovered, "discovered")) {
        report.verdict = InfPowerVerdict::FailFixedPoint;
        return report;
    }

    bool all_achieved = !report.family.empty();
    for (const auto& e : report.family)
        if (!e.achieved) all_achieved = false;
    report.verdict = all_achieved ? InfPowerVerdict::Pass : InfPowerVerdict::Inconclusive;
    if (report.verdict == InfPowerVerdict::Inconclusive && report.family.empty())
        report.note = "no comparison family supplied; nothing decidable at this budget";
    return report;
}

} // namespace ogsr
