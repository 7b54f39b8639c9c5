// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ellfib/sections.hpp"
#include "oracles.hpp"

using namespace ellfib;

namespace {
RationalFunction t()
{
    return RationalFunction::variable();
}

Fibration mordellT2()
{
    return Fibration(CurveQt::shortForm(RationalFunction(0l), t() * t()));
}

Fibration legendre()
{
    return Fibration(CurveQt(RationalFunction(0l), -(RationalFunction(1l) + t()), RationalFunction(0l),
                             t(), RationalFunction(0l)));
}
} // namespace

TEST_CASE("order-3 section of y^2 = x^3 + t^2")
{
    SectionSearchResult r = findTorsionSections(mordellT2());
    REQUIRE(r.sections.size() == 1);
    const TorsionSection& s = r.sections[0];
    CHECK(s.order == 3);
    CHECK(s.x == RationalFunction(0l));
    CHECK((s.y == t() || s.y == -t()));
    CHECK(verifySection(mordellT2(), s));
    CHECK(r.warnings.empty());
}

TEST_CASE("the three order-2 sections of the Legendre family")
{
    SectionSearchResult r = findTorsionSections(legendre());
    REQUIRE(r.sections.size() == 3);
    std::vector<RationalFunction> xs;
    for (const TorsionSection& s : r.sections) {
        CHECK(s.order == 2);
        CHECK(s.y == RationalFunction(0l));
        CHECK(verifySection(legendre(), s));
        xs.push_back(s.x);
    }
    CHECK(std::find(xs.begin(), xs.end(), RationalFunction(0l)) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), RationalFunction(1l)) != xs.end());
    CHECK(std::find(xs.begin(), xs.end(), t()) != xs.end());
}

TEST_CASE("y^2 = x^3 + t has no torsion sections")
{
    Fibration fib(CurveQt::shortForm(RationalFunction(0l), t()));
    SectionSearchResult r = findTorsionSections(fib);
    CHECK(r.sections.empty());
    // fiberwise torsion exists at square and cube parameters but never
    // interpolates; the matcher must not produce a spurious fit
    CHECK(r.warnings.empty());
}

TEST_CASE("verifySection accepts the truth and rejects wrong orders")
{
    TorsionSection good{RationalFunction(0l), t(), 3};
    CHECK(verifySection(mordellT2(), good));

    TorsionSection wrongOrder{RationalFunction(0l), t(), 2};
    CHECK(!verifySection(mordellT2(), wrongOrder));

    TorsionSection legendre2{RationalFunction(1l), RationalFunction(0l), 2};
    CHECK(verifySection(legendre(), legendre2));

    TorsionSection offCurve{RationalFunction(5l), t(), 3};
    CHECK(!verifySection(mordellT2(), offCurve));
}

TEST_CASE("planted two-torsion sections are recovered")
{
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> coeff(-3, 3);
    int done = 0;
    while (done < 5) {
        // cubic (x - x0(t)) (x^2 + x0(t) x + w(t)): (x0, 0) has order 2
        std::vector<Rational> c0{Rational(coeff(rng)), Rational(coeff(rng))};
        std::vector<Rational> w0{Rational(coeff(rng)), Rational(coeff(rng))};
        RationalFunction x0{Polynomial(c0)};
        RationalFunction w{Polynomial(w0)};
        RationalFunction A = w - x0 * x0;
        RationalFunction B = -(x0 * w);
        CurveQt curve = CurveQt::shortForm(A, B);
        if (!curve.isSmooth())
            continue;
        Fibration fib(curve);
        SectionSearchResult r = findTorsionSections(fib);
        bool found = false;
        for (const TorsionSection& s : r.sections)
            if (s.order == 2 && s.x == x0)
                found = true;
        CHECK(found);
        ++done;
    }
}

TEST_CASE("found sections are closed under negation and coprime multiples")
{
    Fibration fib = mordellT2();
    SectionSearchResult r = findTorsionSections(fib);
    for (const TorsionSection& s : r.sections) {
        PointQt p = s.point();
        for (int k = 1; k < s.order; ++k) {
            if (std::gcd(k, s.order) != 1)
                continue;
            PointQt kp = scalarMul(fib.curve(), k, p);
            bool present = false;
            for (const TorsionSection& other : r.sections)
                if (other.x == kp.x)
                    present = true;
            CHECK(present);
        }
    }
}

TEST_CASE("injectivity sweeps")
{
    TorsionSection s{RationalFunction(0l), t(), 3};
    SweepReport rep = injectivitySweep(mordellT2(), s, 100);
    CHECK(rep.checked == 100);
    CHECK(rep.clean());

    TorsionSection ts{t(), RationalFunction(0l), 2};
    SweepReport rep2 = injectivitySweep(legendre(), ts, 50);
    CHECK(rep2.checked == 50);
    CHECK(rep2.clean());

    SweepReport rep0 = injectivitySweep(mordellT2(), s, 0);
    CHECK(rep0.checked == 0);
    CHECK(rep0.clean());

    TorsionSection bad{RationalFunction(0l), t(), 2};
    CHECK_THROWS_AS(injectivitySweep(mordellT2(), bad, 5), ContractError);
}

TEST_CASE("ambiguity budget")
{
    SectionSearchOptions opts;
    opts.ambiguityBudget = 1; // Legendre has 3 choices per fiber already at d = 0
    CHECK_THROWS_AS(findTorsionSections(legendre(), opts), AmbiguityBudgetError);
}

TEST_CASE("sections beyond the degree bound warn and are found at a larger bound")
{
    // plant a two-torsion section with deg x0 = 3
    Polynomial T = Polynomial::variable();
    RationalFunction x0{T * T * T + Polynomial(1l)};
    RationalFunction w{T + Polynomial(2l)};
    CurveQt curve = CurveQt::shortForm(w - x0 * x0, -(x0 * w));
    REQUIRE(curve.isSmooth());
    Fibration fib(curve);

    SectionSearchOptions tight;
    tight.degBound = 2;
    SectionSearchResult rt = findTorsionSections(fib, tight);
    bool planted = false;
    for (const TorsionSection& s : rt.sections)
        planted = planted || s.x == x0;
    CHECK(!planted);
    // order 2 lives in every fiber, so the bounded search must say so
    bool warned = false;
    for (const std::string& wmsg : rt.warnings)
        warned = warned || wmsg.find("order 2") != std::string::npos;
    CHECK(warned);

    SectionSearchOptions wide;
    wide.degBound = 3;
    SectionSearchResult rw = findTorsionSections(fib, wide);
    planted = false;
    for (const TorsionSection& s : rw.sections)
        planted = planted || (s.order == 2 && s.x == x0);
    CHECK(planted);
}

TEST_CASE("degree bound zero still finds constant sections")
{
    SectionSearchOptions opts;
    opts.degBound = 0;
    SectionSearchResult r = findTorsionSections(mordellT2(), opts);
    REQUIRE(r.sections.size() == 1);
    CHECK(r.sections[0].x == RationalFunction(0l));
}
