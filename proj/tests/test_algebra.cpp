// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellfib/expr.hpp"
#include "ellfib/poly.hpp"
#include "ellfib/ratfunc.hpp"
#include "oracles.hpp"

using namespace ellfib;

namespace {
Polynomial T = Polynomial::variable();

Polynomial randomPoly(std::mt19937_64& rng, int maxDeg, long range, bool nonzero = false)
{
    std::uniform_int_distribution<int> deg(0, maxDeg);
    std::uniform_int_distribution<long> coeff(-range, range);
    while (true) {
        std::vector<Rational> c(std::size_t(deg(rng)) + 1);
        for (auto& v : c)
            v = Rational(coeff(rng));
        Polynomial p(std::move(c));
        if (!nonzero || !p.isZero())
            return p;
    }
}
} // namespace

TEST_CASE("rational normal form")
{
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7) == Rational());
    CHECK(Rational(0, 7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), ContractError);
    CHECK(Rational(-7, 2).height() == 7);
    CHECK(Rational(2, 3).str() == "2/3");
    CHECK(Rational(5, 1).str() == "5");
    CHECK(Rational::parse("-2/5") == Rational(-2, 5));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("2/0"), ParseError);
    CHECK(Rational(4, 9).sqrt() == Rational(2, 3));
    CHECK(!Rational(-4).sqrt());
    CHECK(!Rational(2).sqrt());
}

TEST_CASE("rational arithmetic is exact both ways")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(1, 1000), n(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational a(n(rng), d(rng)), b(n(rng), d(rng));
        // direct addition vs explicit common denominator
        Rational direct = a + b;
        Rational common(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
        CHECK(direct == common);
        CHECK(direct.num() == common.num());
        CHECK(direct.den() == common.den());
    }
}

TEST_CASE("polyGcd examples")
{
    // (t^2 - 1, t - 1) -> t - 1
    CHECK(polyGcd(T * T - Polynomial(1l), T - Polynomial(1l)) == T - Polynomial(1l));
    // (t^3, 0) -> t^3
    CHECK(polyGcd(T * T * T, Polynomial()) == T * T * T);
    CHECK(polyGcd(Polynomial(), Polynomial()) == Polynomial());
    // (t^2 + 1, t^2 + t) -> 1   (Euclid: t^2+1 = (t^2+t) - (t-1); ...)
    CHECK(polyGcd(T * T + Polynomial(1l), T * T + T) == Polynomial(1l));
}

TEST_CASE("polyGcd multiplicativity property")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 50; ++i) {
        Polynomial a = randomPoly(rng, 4, 5, true);
        Polynomial b = randomPoly(rng, 4, 5, true);
        Polynomial c = randomPoly(rng, 3, 5, true);
        Polynomial lhs = polyGcd(a * c, b * c);
        Polynomial rhs = (polyGcd(a, b) * c).monic();
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rationalRoots examples")
{
    auto roots = rationalRoots(T * T - Polynomial(1l));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-1));
    CHECK(roots[1] == Rational(1));

    // 3x^4 + 12x = 3x(x^3 + 4); x^3 + 4 has no rational root
    Polynomial p = Polynomial(Rational(3)) * T.pow(4) + Polynomial(Rational(12)) * T;
    auto r2 = rationalRoots(p);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0] == Rational());

    CHECK(rationalRoots(T * T + Polynomial(1l)).empty());
    CHECK_THROWS_AS(rationalRoots(Polynomial()), ContractError);
}

TEST_CASE("rationalRoots finds exactly the roots")
{
    std::mt19937_64 rng(13);
    for (int iter = 0; iter < 20; ++iter) {
        // plant known roots and multiply by a rootless quadratic
        Rational r1 = oracles::randomRational(rng, 6);
        Rational r2 = oracles::randomRational(rng, 6);
        Polynomial p = (T - Polynomial(r1)) * (T - Polynomial(r2)) * (T * T + Polynomial(1l));
        auto roots = rationalRoots(p);
        for (const Rational& r : roots)
            CHECK(p.eval(r).isZero());
        CHECK(std::find(roots.begin(), roots.end(), r1) != roots.end());
        CHECK(std::find(roots.begin(), roots.end(), r2) != roots.end());
    }
    // non-roots evaluate nonzero
    Polynomial p = (T - Polynomial(2l)) * (T * T + Polynomial(1l));
    auto roots = rationalRoots(p);
    std::mt19937_64 rng2(17);
    int checked = 0;
    while (checked < 100) {
        Rational r = oracles::randomRational(rng2, 50);
        if (std::find(roots.begin(), roots.end(), r) != roots.end())
            continue;
        CHECK(!p.eval(r).isZero());
        ++checked;
    }
}

TEST_CASE("squareRootInQt examples")
{
    RationalFunction t = RationalFunction::variable();
    auto s1 = squareRootInQt(t * t);
    REQUIRE(s1);
    CHECK(*s1 == t);

    // (t^2 + 2t + 1) / 4 -> (t + 1) / 2
    RationalFunction f((T + Polynomial(1l)) * (T + Polynomial(1l)), Polynomial(4l));
    auto s2 = squareRootInQt(f);
    REQUIRE(s2);
    CHECK(*s2 == RationalFunction(T + Polynomial(1l), Polynomial(2l)));

    CHECK(!squareRootInQt(t * t * t));
    CHECK(squareRootInQt(RationalFunction()) == RationalFunction());
}

TEST_CASE("squareRootInQt recovers random squares")
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        Polynomial num = randomPoly(rng, 3, 4, true);
        Polynomial den = randomPoly(rng, 2, 4, true);
        RationalFunction g(num, den);
        auto s = squareRootInQt(g * g);
        REQUIRE(s);
        CHECK((*s == g || *s == -g));
        // returned root has positive leading coefficient
        CHECK(s->num().lead().sign() > 0);
    }
}

TEST_CASE("squareRootInQt none-claims versus low-degree search")
{
    RationalFunction t = RationalFunction::variable();
    RationalFunction candidates[] = {t * t * t, t * t + RationalFunction(1l), t * t + t,
                                     RationalFunction(2l) * t * t};
    for (const RationalFunction& f : candidates) {
        CHECK(!squareRootInQt(f));
        CHECK(!oracles::lowDegreeSquareExists(f));
    }
    // a positive control for the oracle family
    CHECK(oracles::lowDegreeSquareExists(t * t));
}

TEST_CASE("expression parser")
{
    CHECK(parsePolynomial("t^2 - 1") == T * T - Polynomial(1l));
    CHECK(parsePolynomial(" -2/5 ") == Polynomial(Rational(-2, 5)));
    CHECK(parsePolynomial("3*t^2+1/2*t") ==
          Polynomial(Rational(3)) * T * T + Polynomial(Rational(1, 2)) * T);
    CHECK(parsePolynomial("(t+1)*(t-1)") == T * T - Polynomial(1l));
    CHECK(parsePolynomial("-t^2") == -(T * T));
    CHECK(parsePolynomial("2^3") == Polynomial(8l));
    CHECK_THROWS_AS(parsePolynomial("t/2"), ParseError);
    CHECK_THROWS_AS(parsePolynomial("t^-1"), ParseError);
    CHECK_THROWS_AS(parsePolynomial("(t"), ParseError);
    CHECK_THROWS_AS(parsePolynomial("x"), ParseError);
}

TEST_CASE("polynomial printing round trip")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = randomPoly(rng, 5, 9);
        CHECK(parsePolynomial(p.str("t")) == p);
    }
}
