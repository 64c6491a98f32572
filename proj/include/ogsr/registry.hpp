#pragma once

#include <string>
#include <vector>

#include "ogsr/detail/text.hpp"
#include "ogsr/rings/corrupted.hpp"
#include "ogsr/rings/integers.hpp"
#include "ogsr/rings/pair.hpp"
#include "ogsr/rings/polynomial.hpp"
#include "ogsr/rings/rationals.hpp"
#include "ogsr/rings/residue.hpp"
#include "ogsr/rings/series.hpp"
#include "ogsr/rings/structure.hpp"

namespace ogsr {

// Builds an instance from its canonical description:
//   integers | rationals
//   poly:<int|rat>,<lex|antilex>[,<degree guard>]
//   pair:<lex|cw>,<cw|dual>
//   series:<N>
//   padic:<p>,<N>
//   sc:demo3
//   corrupt-add | corrupt-cone | corrupt-mul
// Unknown or malformed descriptions raise InvalidSpec.
inline RingPtr make_instance(std::string_view spec) {
    const std::string s{trimmed(spec)};
    if (s == "integers") return make_integers();
    if (s == "rationals") return make_rationals();
    if (s == "corrupt-add") return make_corrupt_add();
    if (s == "corrupt-cone") return make_corrupt_cone();
    if (s == "corrupt-mul") return make_corrupt_mul();

    auto colon = s.find(':');
    if (colon == std::string::npos) throw InvalidSpec("unknown ring '" + s + "'");
    const std::string head = s.substr(0, colon);
    const std::string args = s.substr(colon + 1);
    std::vector<std::string> parts;
    for (auto p : detail::split_top_level(args)) parts.emplace_back(trimmed(p));

    try {
        if (head == "poly") {
            if (parts.size() < 2 || parts.size() > 3)
                throw InvalidSpec("poly takes base,order[,guard]");
            PolyBase base;
            if (parts[0] == "int") base = PolyBase::Integers;
            else if (parts[0] == "rat") base = PolyBase::Rationals;
            else throw InvalidSpec("poly base must be int or rat, got '" + parts[0] + "'");
            PolyOrder order;
            if (parts[1] == "lex") order = PolyOrder::Lexicographic;
            else if (parts[1] == "antilex") order = PolyOrder::Antilexicographic;
            else throw InvalidSpec("poly order must be lex or antilex, got '" + parts[1] + "'");
            std::size_t guard = 512;
            if (parts.size() == 3) guard = static_cast<std::size_t>(parse_int(parts[2]));
            return make_polynomials(base, order, guard);
        }
        if (head == "pair") {
            if (parts.size() != 2) throw InvalidSpec("pair takes order,product");
            PairOrder order;
            if (parts[0] == "lex") order = PairOrder::Lexicographic;
            else if (parts[0] == "cw") order = PairOrder::Componentwise;
            else throw InvalidSpec("pair order must be lex or cw, got '" + parts[0] + "'");
            PairProduct product;
            if (parts[1] == "cw") product = PairProduct::Componentwise;
            else if (parts[1] == "dual") product = PairProduct::DualNumber;
            else throw InvalidSpec("pair product must be cw or dual, got '" + parts[1] + "'");
            return make_pairs(order, product);
        }
        if (head == "series") {
            if (parts.size() != 1) throw InvalidSpec("series takes one precision argument");
            return make_series(static_cast<std::size_t>(parse_int(parts[0])));
        }
        if (head == "padic") {
            if (parts.size() != 2) throw InvalidSpec("padic takes prime,exponent");
            return make_residues(parse_int(parts[0]),
                                 static_cast<unsigned>(parse_int(parts[1])));
        }
        if (head == "sc") {
            if (parts.size() == 1 && parts[0] == "demo3") return make_demo3();
            throw InvalidSpec("unknown structure algebra '" + args + "'");
        }
    } catch (const ParseError& e) {
        throw InvalidSpec("bad ring description '" + s + "': " + e.what());
    }
    throw InvalidSpec("unknown ring '" + s + "'");
}

// Canonical instances every global check runs over. All of them pass the
// ring, order, and claimed-seminorm suites; the corrupted fixtures are
// intentionally not here.
inline std::vector<RingPtr> shipped_instances() {
    return {
        make_integers(),
        make_rationals(),
        make_polynomials(PolyBase::Integers, PolyOrder::Lexicographic),
        make_polynomials(PolyBase::Rationals, PolyOrder::Lexicographic),
        make_polynomials(PolyBase::Rationals, PolyOrder::Antilexicographic),
        make_pairs(PairOrder::Lexicographic, PairProduct::DualNumber),
        make_pairs(PairOrder::Componentwise, PairProduct::Componentwise),
        make_pairs(PairOrder::Componentwise, PairProduct::DualNumber),
        make_series(8),
        make_series(64),
        make_residues(Int(5), 4),
        make_residues(Int(2), 8),
        make_demo3(),
    };
}

// Lowest nonzero degree (truncated series) or prime valuation (residues).
inline Int ord_valuation(const Element& x) {
    auto v = x.ring()->ord_payload(x.payload());
    if (!v)
        throw UnsupportedRing("ord is not defined on '" + x.ring()->name() + "'");
    return *v;
}

inline Int residue_prime(const RingPtr& ring) {
    if (auto* r = dynamic_cast<const ResidueRing*>(ring.get())) return r->prime();
    throw UnsupportedRing("'" + ring->name() + "' is not a residue instance");
}

} // namespace ogsr
