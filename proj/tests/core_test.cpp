#include <gtest/gtest.h>

#include <array>

#include "ogsr/registry.hpp"

using namespace ogsr;

namespace {

// Independent oracle for the demo3 table: walks the basis products by
// hand instead of going through the algebra's bilinear expansion.
// Basis: 0 -> 1, 1 -> a, 2 -> b. Products return the coordinate vector.
Coords demo3_basis_product(std::size_t i, std::size_t j) {
    auto unit = [](std::size_t k) {
        Coords c(3, Rat(0));
        c[k] = 1;
        return c;
    };
    if (i == 0) return unit(j);
    if (j == 0) return unit(i);
    if (i == 1 && j == 1) return unit(2); // a*a = b
    if (i == 1 && j == 2) return unit(0); // a*b = 1
    return Coords(3, Rat(0));             // b*a = b*b = 0
}

Coords demo3_mul(const Coords& x, const Coords& y) {
    Coords out(3, Rat(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Coords cell = demo3_basis_product(i, j);
            for (std::size_t k = 0; k < 3; ++k) out[k] += x[i] * y[j] * cell[k];
        }
    return out;
}

} // namespace

TEST(Compare, TotalOrders) {
    auto z = make_integers();
    EXPECT_EQ(compare(z->parse("2"), z->parse("3")), Comparison::Less);
    EXPECT_EQ(compare(z->parse("3"), z->parse("3")), Comparison::Equal);
    EXPECT_EQ(compare(z->parse("4"), z->parse("3")), Comparison::Greater);

    auto q = make_rationals();
    EXPECT_EQ(compare(q->parse("1/3"), q->parse("1/2")), Comparison::Less);
    EXPECT_EQ(compare(q->parse("-2/4"), q->parse("-1/2")), Comparison::Equal);
}

TEST(Compare, LexPolynomialSign) {
    auto lex = make_polynomials(PolyBase::Rationals, PolyOrder::Lexicographic);
    // 1 - X has highest-degree coefficient -1, so it is negative.
    EXPECT_EQ(compare(lex->parse("[1,-1]"), lex->zero()), Comparison::Less);
    EXPECT_EQ(compare(lex->parse("[0,1]"), lex->one()), Comparison::Greater);
    EXPECT_EQ(compare(lex->parse("[-5,2]"), lex->zero()), Comparison::Greater);
}

TEST(Compare, AntilexPolynomialSign) {
    auto anti = make_polynomials(PolyBase::Rationals, PolyOrder::Antilexicographic);
    // X is positive (lowest coefficient 1) yet below 1 (X - 1 starts at -1).
    EXPECT_EQ(compare(anti->parse("[0,1]"), anti->zero()), Comparison::Greater);
    EXPECT_EQ(compare(anti->parse("[0,1]"), anti->one()), Comparison::Less);
    EXPECT_EQ(compare(anti->parse("[1,-1]"), anti->zero()), Comparison::Greater);
    // No integer multiple of X reaches 1.
    for (int n = 1; n <= 64; ++n) {
        Element nx = anti->from_int(n) * anti->parse("[0,1]");
        EXPECT_EQ(compare(nx, anti->one()), Comparison::Less) << "n = " << n;
    }
}

TEST(Compare, ComponentwiseIncomparable) {
    auto cw = make_pairs(PairOrder::Componentwise, PairProduct::Componentwise);
    EXPECT_EQ(compare(cw->parse("(1,0)"), cw->parse("(0,1)")), Comparison::Incomparable);
    EXPECT_EQ(compare(cw->parse("(1,1)"), cw->parse("(0,1)")), Comparison::Greater);
    EXPECT_EQ(compare(cw->parse("(1,0)"), cw->parse("(1,0)")), Comparison::Equal);
    EXPECT_EQ(compare(cw->parse("(-1,0)"), cw->parse("(0,1)")), Comparison::Less);
}

TEST(Compare, ScalarConeOnStructureAlgebra) {
    auto sc = make_demo3();
    EXPECT_EQ(compare(sc->parse("{2,0,0}"), sc->zero()), Comparison::Greater);
    EXPECT_EQ(compare(sc->parse("{-1/2,0,0}"), sc->zero()), Comparison::Less);
    // a is not a scalar multiple of the unit.
    EXPECT_EQ(compare(sc->parse("{0,1,0}"), sc->zero()), Comparison::Incomparable);
    EXPECT_EQ(compare(sc->parse("{3,1,0}"), sc->parse("{1,1,0}")), Comparison::Greater);
}

TEST(Compare, ResidueDiscreteOrder) {
    auto r = make_residues(Int(5), 4);
    EXPECT_EQ(compare(r->parse("7"), r->parse("7")), Comparison::Equal);
    EXPECT_EQ(compare(r->one(), r->zero()), Comparison::Incomparable);
    EXPECT_FALSE(r->declares_one_nonneg());
}

TEST(Element, MixedRingsRejected) {
    auto z = make_integers();
    auto q = make_rationals();
    EXPECT_THROW((void)(z->one() + q->one()), MixedRings);
    EXPECT_THROW((void)(z->one() * q->one()), MixedRings);
    EXPECT_THROW((void)compare(z->one(), q->one()), MixedRings);
    // Same description built twice interoperates.
    auto q2 = make_rationals();
    EXPECT_EQ(q->parse("1/2") + q2->parse("1/2"), q->one());
}

TEST(Element, FromIntMatchesRepeatedAddition) {
    for (const auto& ring : shipped_instances()) {
        Element acc = ring->zero();
        for (int n = 0; n <= 7; ++n) {
            EXPECT_EQ(ring->from_int(n), acc) << ring->name() << " n=" << n;
            acc = acc + ring->one();
        }
        EXPECT_EQ(ring->from_int(-3), -(ring->from_int(3))) << ring->name();
    }
}

TEST(OrientedPower, UnitAtZeroAndAgreementWhenAssociative) {
    std::array<RingPtr, 4> assoc = {make_integers(), make_rationals(),
                                    make_series(8), make_residues(Int(5), 4)};
    for (const auto& ring : assoc) {
        Sampler s(17);
        for (int trial = 0; trial < 20; ++trial) {
            Element x = ring->sample(s);
            EXPECT_EQ(oriented_power(x, 0, PowerDirection::RightNested), ring->one());
            for (unsigned n = 1; n <= 16; n *= 2) {
                EXPECT_EQ(oriented_power(x, n, PowerDirection::RightNested),
                          oriented_power(x, n, PowerDirection::LeftNested))
                    << ring->name() << " n=" << n;
            }
        }
    }
}

TEST(OrientedPower, Demo3NestingMatters) {
    auto sc = make_demo3();
    Element a = sc->parse("{0,1,0}");

    // Oracle: brute-force expansion through the hand-written table.
    Coords right{0, 1, 0};
    Coords left{0, 1, 0};
    for (int step = 0; step < 2; ++step) {
        right = demo3_mul(Coords{0, 1, 0}, right);
        left = demo3_mul(left, Coords{0, 1, 0});
    }
    EXPECT_EQ(right, Coords({1, 0, 0})); // a^{->3} = a*(a*a) = a*b = 1
    EXPECT_EQ(left, Coords({0, 0, 0}));  // a^{<-3} = (a*a)*a = b*a = 0

    EXPECT_EQ(oriented_power(a, 3, PowerDirection::RightNested), sc->one());
    EXPECT_EQ(oriented_power(a, 3, PowerDirection::LeftNested), sc->zero());
    EXPECT_EQ(oriented_power(a, 2, PowerDirection::RightNested),
              oriented_power(a, 2, PowerDirection::LeftNested));
}

TEST(Grammar, RoundTripOnSamples) {
    for (const auto& ring : shipped_instances()) {
        Sampler s(99);
        for (int trial = 0; trial < 500; ++trial) {
            Element x = ring->sample(s);
            Element back = ring->parse(x.str());
            EXPECT_EQ(back, x) << ring->name() << " text=" << x.str();
            EXPECT_EQ(back.str(), x.str()) << ring->name();
        }
    }
}

TEST(Grammar, CanonicalForms) {
    auto q = make_rationals();
    EXPECT_EQ(q->parse("2/4").str(), "1/2");
    EXPECT_EQ(q->parse("-6/3").str(), "-2");
    auto p = make_polynomials(PolyBase::Rationals, PolyOrder::Lexicographic);
    EXPECT_EQ(p->parse("[1,0,0]").str(), "[1]");
    EXPECT_EQ(p->parse("[]").str(), "[]");
    EXPECT_EQ(p->zero().str(), "[]");
    auto r = make_residues(Int(5), 4);
    EXPECT_EQ(r->parse("-4").str(), "621");
    EXPECT_EQ(r->parse("630").str(), "5");
    auto pr = make_pairs(PairOrder::Lexicographic, PairProduct::DualNumber);
    EXPECT_EQ(pr->parse("( 1 , -1 )").str(), "(1,-1)");
}

TEST(Grammar, Errors) {
    auto pr = make_pairs(PairOrder::Lexicographic, PairProduct::DualNumber);
    EXPECT_THROW(pr->parse("(1,2,3)"), WrongArity);
    EXPECT_THROW(pr->parse("1,2"), ParseError);
    auto pz = make_polynomials(PolyBase::Integers, PolyOrder::Lexicographic);
    EXPECT_THROW(pz->parse("[1/2]"), ParseError);
    EXPECT_THROW(pz->parse("[1,"), ParseError);
    auto sc = make_demo3();
    EXPECT_THROW(sc->parse("{1,2}"), WrongArity);
    auto q = make_rationals();
    EXPECT_THROW(q->parse("1/0"), ParseError);
    EXPECT_THROW(q->parse("abc"), ParseError);
}

TEST(Registry, SpecStrings) {
    EXPECT_EQ(make_instance("integers")->name(), "integers");
    EXPECT_EQ(make_instance("poly:rat,antilex")->name(), "poly:rat,antilex");
    EXPECT_EQ(make_instance("pair:lex,dual")->name(), "pair:lex,dual");
    EXPECT_EQ(make_instance("series:64")->name(), "series:64");
    EXPECT_EQ(make_instance("padic:5,4")->name(), "padic:5,4");
    EXPECT_EQ(make_instance("sc:demo3")->name(), "sc:demo3");
    EXPECT_THROW(make_instance("padic:6,2"), InvalidSpec);
    EXPECT_THROW(make_instance("pair:lex"), InvalidSpec);
    EXPECT_THROW(make_instance("nonsense"), InvalidSpec);
    EXPECT_THROW(make_instance("poly:rat,weird"), InvalidSpec);
}

TEST(Registry, OrdValuation) {
    auto s8 = make_series(8);
    EXPECT_EQ(ord_valuation(s8->parse("[0,0,0,1,0,2]")), Int(3));
    EXPECT_EQ(ord_valuation(s8->zero()), Int(8));
    auto r = make_residues(Int(5), 4);
    EXPECT_EQ(ord_valuation(r->parse("50")), Int(2));
    EXPECT_EQ(ord_valuation(r->parse("1")), Int(0));
    EXPECT_EQ(ord_valuation(r->zero()), Int(4));
    EXPECT_EQ(ord_valuation(r->parse("125")), Int(3));
    EXPECT_THROW(ord_valuation(make_rationals()->one()), UnsupportedRing);
}

TEST(Series, TruncationAndNilpotentX) {
    auto s8 = make_series(8);
    Element x = s8->parse("[0,1]");
    EXPECT_EQ(oriented_power(x, 7, PowerDirection::RightNested),
              s8->parse("[0,0,0,0,0,0,0,1]"));
    EXPECT_EQ(oriented_power(x, 8, PowerDirection::RightNested), s8->zero());
    // ord is superadditive, capped at N.
    Sampler s(7);
    for (int trial = 0; trial < 200; ++trial) {
        Element a = s8->sample(s);
        Element b = s8->sample(s);
        Int oa = ord_valuation(a), ob = ord_valuation(b);
        Int cap = oa + ob;
        if (cap > 8) cap = 8;
        EXPECT_GE(ord_valuation(a * b), cap) << a.str() << " * " << b.str();
    }
}

TEST(Pairs, DualNumberProductAndUnits) {
    auto dual = make_pairs(PairOrder::Lexicographic, PairProduct::DualNumber);
    EXPECT_EQ(dual->one().str(), "(1,0)");
    EXPECT_EQ(dual->parse("(0,1)") * dual->parse("(0,1)"), dual->zero());
    EXPECT_EQ(dual->parse("(1,-1)") * dual->parse("(1,1)"), dual->one());
    auto cw = make_pairs(PairOrder::Componentwise, PairProduct::Componentwise);
    EXPECT_EQ(cw->one().str(), "(1,1)");
    EXPECT_EQ(cw->parse("(1,0)") * cw->parse("(0,1)"), cw->zero());
}

TEST(Residues, ArithmeticModPrimePower) {
    auto r = std::make_shared<ResidueRing>(Int(5), 4);
    EXPECT_EQ(r->modulus(), Int(625));
    Element m4 = r->parse("-4");
    Element s156 = r->parse("156");
    EXPECT_EQ(m4 * s156, r->one());
    EXPECT_EQ((r->parse("624") + r->one()), r->zero());
}

TEST(Structure, InvalidSpecs) {
    StructureConstantAlgebra::Table t(1, std::vector<Coords>(1, Coords{Rat(1)}));
    EXPECT_NO_THROW(StructureConstantAlgebra("triv", 1, 0, t));
    EXPECT_THROW(StructureConstantAlgebra("bad", 1, 1, t), InvalidSpec);
    // Dependent cone generators are rejected.
    EXPECT_THROW(StructureConstantAlgebra("dep", 1, 0, t,
                                          {Coords{Rat(1)}, Coords{Rat(2)}}),
                 InvalidSpec);
}
