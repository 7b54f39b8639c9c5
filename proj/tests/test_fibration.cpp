// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "ellfib/fibration.hpp"
#include "ellfib/inputfile.hpp"
#include "oracles.hpp"

using namespace ellfib;

namespace {
RationalFunction t()
{
    return RationalFunction::variable();
}

Fibration mordellT() // y^2 = x^3 + t
{
    return Fibration(CurveQt::shortForm(RationalFunction(0l), t()));
}

Fibration legendre() // y^2 = x(x-1)(x-t)
{
    return Fibration(CurveQt(RationalFunction(0l), -(RationalFunction(1l) + t()), RationalFunction(0l),
                             t(), RationalFunction(0l)));
}
} // namespace

TEST_CASE("discriminant of standard families")
{
    CHECK(discriminantFunction(mordellT()) == RationalFunction(-432l) * t() * t());

    Fibration m2(CurveQt::shortForm(RationalFunction(0l), t() * t()));
    CHECK(discriminantFunction(m2) == RationalFunction(-432l) * (t() * t()).pow(2));

    // Legendre: 16 t^2 (t - 1)^2
    RationalFunction expect =
        RationalFunction(16l) * t() * t() * (t() - RationalFunction(1l)) * (t() - RationalFunction(1l));
    CHECK(discriminantFunction(legendre()) == expect);

    // the generic fiber must be smooth
    CHECK_THROWS_AS(Fibration(CurveQt::shortForm(RationalFunction(0l), RationalFunction(0l))),
                    SingularCurveError);
}

TEST_CASE("rational discriminant locus")
{
    DiscLocusQ l1 = discriminantLocusQ(mordellT());
    REQUIRE(l1.points.size() == 1);
    CHECK(l1.points[0] == Rational(0));
    CHECK(!l1.hasNonRationalPart);

    DiscLocusQ l2 = discriminantLocusQ(legendre());
    REQUIRE(l2.points.size() == 2);
    CHECK(l2.points[0] == Rational(0));
    CHECK(l2.points[1] == Rational(1));
    CHECK(!l2.hasNonRationalPart);

    // y^2 = x^3 + x + t: disc -16(4 + 27 t^2) has no rational zero
    Fibration f3(CurveQt::shortForm(RationalFunction(1l), t()));
    DiscLocusQ l3 = discriminantLocusQ(f3);
    CHECK(l3.points.empty());
    CHECK(l3.hasNonRationalPart);
}

TEST_CASE("specialization")
{
    Fibration fib = mordellT();
    CHECK_THROWS_AS(specialize(fib, Rational(0)), SingularFiberError);

    CurveQ f4 = specialize(fib, Rational(4));
    CHECK(f4.a6 == Rational(4));
    CHECK(torsionSubgroupQ(f4).label == TorsionGroupLabel::cyclic(3));

    CurveQ f2 = specialize(fib, Rational(2));
    CHECK(torsionSubgroupQ(f2).label.isTrivial());

    // coefficient pole: a4 = 1/t
    Fibration fp(CurveQt(RationalFunction(0l), RationalFunction(0l), RationalFunction(0l),
                         RationalFunction(Polynomial(1l), Polynomial::variable()), RationalFunction(1l)));
    CHECK_THROWS_AS(specialize(fp, Rational(0)), PoleError);
}

TEST_CASE("specializing section points")
{
    Fibration m2(CurveQt::shortForm(RationalFunction(0l), t() * t()));
    PointQt sec(RationalFunction(0l), t());
    PointQ p = specializePoint(m2, sec, Rational(3));
    CHECK(p == PointQ(Rational(0), Rational(3)));
    CHECK(onCurve(specialize(m2, Rational(3)), p));

    CHECK(specializePoint(m2, PointQt::infinity(), Rational(5)) == PointQ::infinity());

    // (t, 0) on the Legendre family has order 2 in every smooth fiber
    PointQt tsec(t(), RationalFunction(0l));
    PointQ q = specializePoint(legendre(), tsec, Rational(5));
    CHECK(q == PointQ(Rational(5), Rational(0)));
    CHECK(pointOrder(specialize(legendre(), Rational(5)), q) == 2);
}

TEST_CASE("specialization commutes with the discriminant")
{
    std::mt19937_64 rng(61);
    Fibration fams[] = {mordellT(), legendre()};
    for (const Fibration& fib : fams) {
        RationalFunction disc = discriminantFunction(fib);
        DiscLocusQ locus = discriminantLocusQ(fib);
        int tried = 0;
        while (tried < 25) {
            Rational t0 = oracles::randomRational(rng, 30);
            if (locus.contains(t0) || hasCoefficientPole(fib, t0))
                continue;
            CurveQ fiber = specialize(fib, t0);
            CHECK(fiber.discriminant() == *disc.eval(t0));
            ++tried;
        }
    }
}

TEST_CASE("specialization is a homomorphism on sections")
{
    Fibration fib = legendre();
    PointQt a(RationalFunction(0l), RationalFunction(0l));
    PointQt b(t(), RationalFunction(0l));
    PointQt sum = add(fib.curve(), a, b);
    DiscLocusQ locus = discriminantLocusQ(fib);

    std::mt19937_64 rng(67);
    int tried = 0;
    while (tried < 50) {
        Rational t0 = oracles::randomRational(rng, 40);
        if (locus.contains(t0))
            continue;
        if (sum.x.hasPoleAt(t0) || sum.y.hasPoleAt(t0))
            continue;
        CurveQ fiber = specialize(fib, t0);
        PointQ lhs = specializePoint(fib, sum, t0);
        PointQ rhs = add(fiber, specializePoint(fib, a, t0), specializePoint(fib, b, t0));
        CHECK(lhs == rhs);
        ++tried;
    }
}

TEST_CASE("fibration file parsing")
{
    std::istringstream in("# a family\n"
                          "base = P1\n"
                          "a2 = -1 - t\n"
                          "a4 = t\n");
    InputDoc doc = parseInputDoc(in, "test");
    CHECK(doc.baseKind == BaseKind::P1);
    Fibration fib = doc.makeFibration();
    CHECK(discriminantFunction(fib) == discriminantFunction(legendre()));

    std::istringstream bad("a7 = t\n");
    CHECK_THROWS_AS(parseInputDoc(bad, "test"), ParseError);
    std::istringstream bad2("a4 t\n");
    CHECK_THROWS_AS(parseInputDoc(bad2, "test"), ParseError);

    std::istringstream basis("base = elliptic\n"
                             "a6 = t\n"
                             "base_a6 = -2\n"
                             "gen = (3, 5)\n");
    InputDoc doc2 = parseInputDoc(basis, "test");
    CHECK(doc2.baseKind == BaseKind::EllipticBase);
    REQUIRE(doc2.basis.has_value());
    CHECK(doc2.basis->generators.size() == 1);
    CHECK(doc2.basis->curve.a6 == Rational(-2));

    // listed generator must not be torsion
    std::istringstream badBasis("base_a6 = 4\ngen = (0, 2)\n");
    CHECK_THROWS_AS(parseInputDoc(badBasis, "test"), ParseError);
}
