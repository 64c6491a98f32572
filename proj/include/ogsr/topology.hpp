#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogsr/detail/text.hpp"
#include "ogsr/ring.hpp"

namespace ogsr {

// One subbasic closed set of the interval topology: a principal down-set
// { x : x <= b } or up-set { x : a <= x }.
enum class BoundKind { DownSet, UpSet };

struct SubbasicClosed {
    BoundKind kind;
    Element bound;
};

// Basic open set: the complement of finitely many subbasic closed sets.
// Membership needs only negated <= tests, so it works verbatim in partial
// orders, where Incomparable counts as "not <=". The empty exclusion list
// is the whole space.
class BasicOpen {
public:
    explicit BasicOpen(RingPtr ring) : ring_(std::move(ring)) {}

    static BasicOpen whole(RingPtr ring) { return BasicOpen(std::move(ring)); }

    static BasicOpen greater_than(const Element& low) {
        BasicOpen v(low.ring());
        v.exclude_down(low);
        return v;
    }

    static BasicOpen less_than(const Element& high) {
        BasicOpen v(high.ring());
        v.exclude_up(high);
        return v;
    }

    static BasicOpen interval(const Element& low, const Element& high) {
        BasicOpen v(low.ring());
        v.exclude_down(low);
        v.exclude_up(high);
        return v;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<SubbasicClosed>& excluded() const { return excluded_; }
    bool is_whole() const { return excluded_.empty(); }

    void exclude_down(const Element& b) {
        ring_->guard(ring_->zero(), b, "exclude-down");
        excluded_.push_back({BoundKind::DownSet, b});
    }

    void exclude_up(const Element& a) {
        ring_->guard(ring_->zero(), a, "exclude-up");
        excluded_.push_back({BoundKind::UpSet, a});
    }

    bool contains(const Element& x) const {
        ring_->guard(ring_->zero(), x, "open-contains");
        for (const auto& s : excluded_) {
            if (s.kind == BoundKind::DownSet && cmp_leq(compare(x, s.bound))) return false;
            if (s.kind == BoundKind::UpSet && cmp_geq(compare(x, s.bound))) return false;
        }
        return true;
    }

    // Pointwise translate V + a: every bound shifts by a, so that
    // contains(translated(a), x) iff contains(*this, x - a).
    BasicOpen translated(const Element& a) const {
        BasicOpen out(ring_);
        for (const auto& s : excluded_) out.excluded_.push_back({s.kind, s.bound + a});
        return out;
    }

    // Pointwise negation -V: down-sets and up-sets trade places with
    // negated bounds, so that contains(negated(), x) iff contains(*this, -x).
    BasicOpen negated() const {
        BasicOpen out(ring_);
        for (const auto& s : excluded_)
            out.excluded_.push_back(
                {s.kind == BoundKind::DownSet ? BoundKind::UpSet : BoundKind::DownSet, -s.bound});
        return out;
    }

    BasicOpen intersect(const BasicOpen& other) const {
        ring_->guard(ring_->zero(), other.ring()->zero(), "open-intersect");
        BasicOpen out(ring_);
        out.excluded_ = excluded_;
        out.excluded_.insert(out.excluded_.end(), other.excluded_.begin(), other.excluded_.end());
        return out;
    }

    std::vector<Element> down_bounds() const {
        std::vector<Element> out;
        for (const auto& s : excluded_)
            if (s.kind == BoundKind::DownSet) out.push_back(s.bound);
        return out;
    }

    std::vector<Element> up_bounds() const {
        std::vector<Element> out;
        for (const auto& s : excluded_)
            if (s.kind == BoundKind::UpSet) out.push_back(s.bound);
        return out;
    }

    std::string str() const {
        auto join = [](const std::vector<Element>& es) {
            std::string out;
            for (std::size_t i = 0; i < es.size(); ++i) {
                if (i) out += ",";
                out += es[i].str();
            }
            return out;
        };
        return "open{ below: [" + join(down_bounds()) + "], above: [" + join(up_bounds()) + "] }";
    }

private:
    RingPtr ring_;
    std::vector<SubbasicClosed> excluded_;
};

// Inverse of BasicOpen::str: open{ below: [b1,...], above: [a1,...] },
// either list possibly empty, keys in either order.
inline BasicOpen parse_open(const RingPtr& ring, std::string_view text) {
    std::string_view t = trimmed(text);
    if (t.substr(0, 4) != "open") throw ParseError("expected open{...}, got '" + std::string(t) + "'");
    std::string_view body = detail::strip_brackets(t.substr(4), '{', '}', "open{...}");
    BasicOpen out(ring);
    if (trimmed(body).empty()) return out;
    for (const auto& part : detail::split_top_level(body)) {
        const auto colon = part.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("expected 'key: [...]' inside open{...}, got '" + std::string(part) +
                             "'");
        const std::string_view key = trimmed(part.substr(0, colon));
        const std::string_view list =
            detail::strip_brackets(part.substr(colon + 1), '[', ']', "a bound list");
        std::vector<Element> bounds;
        if (!trimmed(list).empty())
            for (const auto& item : detail::split_top_level(list)) bounds.push_back(ring->parse(item));
        if (key == "below")
            for (const auto& b : bounds) out.exclude_down(b);
        else if (key == "above")
            for (const auto& a : bounds) out.exclude_up(a);
        else
            throw ParseError("unknown open{...} key '" + std::string(key) + "'");
    }
    return out;
}

// Convergence of a weakly increasing chain to its supremum: for each
// supplied open around the sup, the least prefix index from which the
// chain stays inside, if there is one.
struct SupOpenEntry {
    std::string open_text;
    bool eventually_inside = false;
    std::size_t entry_index = 0;
};

struct SupLimitReport {
    std::string instance;
    std::size_t chain_length = 0;
    std::string limit_text;
    std::vector<SupOpenEntry> opens;

    bool passed() const {
        for (const auto& o : opens)
            if (!o.eventually_inside) return false;
        return true;
    }

    std::string to_report() const {
        std::string out;
        out += "sup-limit: " + instance + "\n";
        out += "chain-length: " + std::to_string(chain_length) + "\n";
        out += "limit: " + limit_text + "\n";
        for (std::size_t i = 0; i < opens.size(); ++i) {
            out += "open[" + std::to_string(i) + "]: " + opens[i].open_text;
            if (opens[i].eventually_inside)
                out += " entered-at: " + std::to_string(opens[i].entry_index) +
                       " status: eventually-inside\n";
            else
                out += " status: not-eventually-inside\n";
        }
        out += std::string("result: ") + (passed() ? "pass" : "fail") + "\n";
        return out;
    }
};

inline SupLimitReport sup_limit_check(const std::vector<Element>& chain, const Element& sup,
                                      const std::vector<BasicOpen>& opens) {
    if (chain.empty()) throw PreconditionFailed("sup-limit: empty chain");
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!cmp_leq(compare(chain[i - 1], chain[i])))
            throw NotIncreasing("chain is not weakly increasing at index " + std::to_string(i) +
                                    ": " + chain[i - 1].str() + " then " + chain[i].str(),
                                i);
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (!cmp_leq(compare(chain[i], sup)))
            throw PreconditionFailed("sup-limit: " + sup.str() + " is not an upper bound, chain[" +
                                     std::to_string(i) + "] = " + chain[i].str());

    SupLimitReport report;
    report.instance = sup.ring()->name();
    report.chain_length = chain.size();
    report.limit_text = sup.str();
    for (const auto& open : opens) {
        if (!open.contains(sup))
            throw PreconditionFailed("sup-limit: open " + open.str() +
                                     " does not contain the claimed supremum " + sup.str());
        SupOpenEntry entry;
        entry.open_text = open.str();
        std::size_t first_inside_tail = chain.size();
        for (std::size_t i = chain.size(); i-- > 0;) {
            if (!open.contains(chain[i])) break;
            first_inside_tail = i;
        }
        entry.eventually_inside = first_inside_tail < chain.size();
        entry.entry_index = first_inside_tail;
        report.opens.push_back(std::move(entry));
    }
    return report;
}

// An open set certifying u_other is not the limit of the chain: it
// contains u_other, and the chain is eventually (in fact from
// avoided_from on) outside it. Two constructions cover both sides:
// points not below the sup are cut off by the sup's down-set, points the
// chain strictly passes are cut off by a chain element's up-set.
enum class SeparationStatus { Found, NoWitnessFound };

inline const char* to_string(SeparationStatus s) {
    return s == SeparationStatus::Found ? "Found" : "NoWitnessFound";
}

struct SeparationWitness {
    SeparationStatus status = SeparationStatus::NoWitnessFound;
    std::optional<BasicOpen> open;
    std::string branch;
    std::size_t avoided_from = 0;

    std::string to_report() const {
        std::string out;
        out += std::string("separation: ") + to_string(status) + "\n";
        if (status == SeparationStatus::Found) {
            out += "branch: " + branch + "\n";
            out += "open: " + open->str() + "\n";
            out += "avoided-from: " + std::to_string(avoided_from) + "\n";
        }
        return out;
    }
};

inline SeparationWitness separation_witness(const Element& u_limit, const Element& u_other,
                                            const std::vector<Element>& chain) {
    if (compare(u_other, u_limit) == Comparison::Equal)
        throw PreconditionFailed("separation: u_other equals the limit " + u_limit.str());
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!cmp_leq(compare(chain[i - 1], chain[i])))
            throw NotIncreasing("chain is not weakly increasing at index " + std::to_string(i), i);
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (!cmp_leq(compare(chain[i], u_limit)))
            throw PreconditionFailed("separation: " + u_limit.str() +
                                     " is not an upper bound of the chain");

    SeparationWitness w;
    if (!cmp_leq(compare(u_other, u_limit))) {
        // Everything the chain visits stays in the sup's down-set, which
        // u_other escapes.
        w.status = SeparationStatus::Found;
        w.open = BasicOpen::greater_than(u_limit);
        w.branch = "exclude-down-set-of-limit";
        w.avoided_from = 0;
        return w;
    }
    for (std::size_t m = 0; m < chain.size(); ++m) {
        if (!cmp_leq(compare(chain[m], u_other))) {
            // From index m on the chain sits in the up-set of chain[m].
            w.status = SeparationStatus::Found;
            w.open = BasicOpen::less_than(chain[m]);
            w.branch = "exclude-up-set-of-chain-element";
            w.avoided_from = m;
            return w;
        }
    }
    return w;
}

namespace detail {

inline Element quarter(const Element& e) {
    auto q = e.ring()->divide_by_int_payload(e.payload(), Int(4));
    if (!q)
        throw UnsupportedRing("exact quarters are unavailable in " + e.ring()->name());
    return e.ring()->make(*q);
}

inline bool totally_ordered(const RingPtr& r) {
    switch (r->order_kind()) {
    case OrderKind::Total:
    case OrderKind::Lexicographic:
    case OrderKind::Antilexicographic: return true;
    default: return false;
    }
}

} // namespace detail

// Additive continuity witness: two opens around a and b whose sums stay
// inside V. Each bound keeps a quarter of its slack per factor, so sums
// retain half the slack.
struct SplitResult {
    BasicOpen w1;
    BasicOpen w2;

    std::string to_report() const {
        return "w1: " + w1.str() + "\nw2: " + w2.str() + "\n";
    }
};

inline SplitResult split_neighborhood(const BasicOpen& v, const Element& a, const Element& b) {
    const RingPtr& ring = v.ring();
    if (!ring->divisible_by_integers() || !detail::totally_ordered(ring))
        throw UnsupportedRing("split needs a totally ordered carrier with exact division by 4, "
                              "not " +
                              ring->name());
    const Element sum = a + b;
    if (!v.contains(sum))
        throw NotMember("split: " + sum.str() + " is not in " + v.str());

    // Tightest margin per side; bounds on the same side nest in a total
    // order, so the smallest slack controls all of them.
    std::optional<Element> low_margin;
    std::optional<Element> up_margin;
    for (const auto& s : v.excluded()) {
        const Element slack =
            s.kind == BoundKind::DownSet ? sum - s.bound : s.bound - sum;
        const Element margin = detail::quarter(slack);
        auto& side = s.kind == BoundKind::DownSet ? low_margin : up_margin;
        if (!side || compare(margin, *side) == Comparison::Less) side = margin;
    }

    SplitResult out{BasicOpen(ring), BasicOpen(ring)};
    if (low_margin) {
        out.w1.exclude_down(a - *low_margin);
        out.w2.exclude_down(b - *low_margin);
    }
    if (up_margin) {
        out.w1.exclude_up(a + *up_margin);
        out.w2.exclude_up(b + *up_margin);
    }
    return out;
}

// Multiplicative continuity witness over the rationals: two opens around
// x and y whose products stay inside V, following the epsilon-eta cases
// at (0,0), (a,0), (0,b) and a positive-cone interval construction when
// both factors are nonzero.
struct ProductWitness {
    BasicOpen v1;
    BasicOpen v2;
    std::string case_note;

    std::string to_report() const {
        return "case: " + case_note + "\nv1: " + v1.str() + "\nv2: " + v2.str() + "\n";
    }
};

namespace detail {

// Effective one-sided bounds of a rational basic open: the largest lower
// exclusion and the smallest upper exclusion.
struct RatBounds {
    std::optional<Rat> low;
    std::optional<Rat> high;
};

inline RatBounds effective_bounds(const BasicOpen& v) {
    RatBounds out;
    for (const auto& s : v.excluded()) {
        const Rat& b = s.bound.rat();
        if (s.kind == BoundKind::DownSet) {
            if (!out.low || b > *out.low) out.low = b;
        } else {
            if (!out.high || b < *out.high) out.high = b;
        }
    }
    return out;
}

inline BasicOpen rat_interval(const RingPtr& ring, const std::optional<Rat>& low,
                              const std::optional<Rat>& high) {
    BasicOpen out(ring);
    if (low) out.exclude_down(ring->make(Payload(*low)));
    if (high) out.exclude_up(ring->make(Payload(*high)));
    return out;
}

} // namespace detail

inline ProductWitness product_continuity_witness(const BasicOpen& v, const Element& x,
                                                 const Element& y) {
    const RingPtr& ring = v.ring();
    if (ring->carrier() != Carrier::Rationals)
        throw UnsupportedRing("product continuity witnesses need the rational field, not " +
                              ring->name());
    if (!v.contains(x * y))
        throw NotMember("product witness: " + (x * y).str() + " is not in " + v.str());
    if (v.is_whole()) return {BasicOpen::whole(ring), BasicOpen::whole(ring), "whole-space"};

    const auto bounds = detail::effective_bounds(v);
    const Rat xr = x.rat();
    const Rat yr = y.rat();

    if (xr == 0 || yr == 0) {
        // Symmetric radius inside V around 0 = x*y.
        std::optional<Rat> eps;
        if (bounds.low) eps = -*bounds.low;
        if (bounds.high && (!eps || *bounds.high < *eps)) eps = *bounds.high;
        if (xr == 0 && yr == 0)
            return {detail::rat_interval(ring, Rat(-1), Rat(1)),
                    detail::rat_interval(ring, -*eps, *eps), "both-zero"};
        // One factor sits away from zero: cap its magnitude at m = 3|a|/2
        // and shrink the other side to eps/m.
        const Rat a = xr == 0 ? yr : xr;
        const Rat eta = rat_abs(a) / 2;
        const Rat m = rat_abs(a) + eta;
        const BasicOpen around_a = detail::rat_interval(ring, a - eta, a + eta);
        const BasicOpen around_0 = detail::rat_interval(ring, -*eps / m, *eps / m);
        if (xr == 0) return {around_0, around_a, "first-zero"};
        return {around_a, around_0, "second-zero"};
    }

    // Sign reductions: flip a negative factor and the target open.
    if (xr < 0) {
        ProductWitness w = product_continuity_witness(v.negated(), -x, y);
        return {w.v1.negated(), w.v2, w.case_note + " (first factor negated)"};
    }
    if (yr < 0) {
        ProductWitness w = product_continuity_witness(v.negated(), x, -y);
        return {w.v1, w.v2.negated(), w.case_note + " (second factor negated)"};
    }

    // Positive cone: 0 <= L < x*y < U where present. Pick the second
    // interval by arithmetic means, then transport the target bounds
    // through it; products then sit strictly between L and U.
    const Rat low = bounds.low && *bounds.low > 0 ? *bounds.low : Rat(0);
    const Rat alpha2 = (low / xr + yr) / 2;
    const Rat alpha1 = alpha2 == 0 ? Rat(0) : low / alpha2;
    std::optional<Rat> beta1;
    std::optional<Rat> beta2;
    if (bounds.high) {
        beta2 = (yr + *bounds.high / xr) / 2;
        beta1 = *bounds.high / *beta2;
    }
    return {detail::rat_interval(ring, alpha1, beta1), detail::rat_interval(ring, alpha2, beta2),
            "positive-cone"};
}

// A sampled member of a rational basic open, for property sweeps.
inline Element sample_in_open(const BasicOpen& v, Sampler& s) {
    const RingPtr& ring = v.ring();
    if (ring->carrier() != Carrier::Rationals)
        throw UnsupportedRing("open sampling is implemented for rationals, not " + ring->name());
    const auto bounds = detail::effective_bounds(v);
    if (bounds.low && bounds.high) {
        const Rat width = *bounds.high - *bounds.low;
        if (width <= 0) throw PreconditionFailed("cannot sample from empty open " + v.str());
        const Rat t = Rat(s.int_in(1, 127), 128);
        return ring->make(Payload(*bounds.low + width * t));
    }
    const Rat step = Rat(s.int_in(1, 64), s.int_in(1, 8));
    if (bounds.low) return ring->make(Payload(*bounds.low + step));
    if (bounds.high) return ring->make(Payload(*bounds.high - step));
    return ring->sample(s);
}

} // namespace ogsr
