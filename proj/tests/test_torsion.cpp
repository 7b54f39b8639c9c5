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

#include "oracles.hpp"

using namespace ellfib;

namespace {
CurveQ mordellCurve(long d)
{
    return CurveQ::shortForm(Rational(0), Rational(d));
}

bool sameGroup(const TorsionSubgroup& a, const TorsionSubgroup& b)
{
    if (a.label != b.label || a.points.size() != b.points.size())
        return false;
    for (const PointQ& p : a.points)
        if (std::find(b.points.begin(), b.points.end(), p) == b.points.end())
            return false;
    return true;
}
} // namespace

TEST_CASE("pointOrder examples")
{
    CHECK(pointOrder(mordellCurve(4), PointQ::infinity()) == 1);
    // (0, 2) on y^2 = x^3 + 4: doubling gives (0, -2), tripling infinity
    CHECK(pointOrder(mordellCurve(4), PointQ(Rational(0), Rational(2))) == 3);
    // (3, 5) on y^2 = x^3 - 2 is non-torsion
    CHECK(!pointOrder(mordellCurve(-2), PointQ(Rational(3), Rational(5))));
    CHECK_THROWS_AS(pointOrder(mordellCurve(4), PointQ(Rational(1), Rational(1))), ContractError);
}

TEST_CASE("torsion of y^2 = x^3 + D: square, cube, neither")
{
    CHECK(torsionSubgroupQ(mordellCurve(4)).label == TorsionGroupLabel::cyclic(3));
    CHECK(torsionSubgroupQ(mordellCurve(9)).label == TorsionGroupLabel::cyclic(3));
    CHECK(torsionSubgroupQ(mordellCurve(8)).label == TorsionGroupLabel::cyclic(2));
    CHECK(torsionSubgroupQ(mordellCurve(27)).label == TorsionGroupLabel::cyclic(2));
    CHECK(torsionSubgroupQ(mordellCurve(2)).label.isTrivial());
    CHECK(torsionSubgroupQ(mordellCurve(3)).label.isTrivial());
    CHECK(torsionSubgroupQ(mordellCurve(5)).label.isTrivial());
    // D = 1 is one of the exceptional values: full Z/6
    CHECK(torsionSubgroupQ(mordellCurve(1)).label == TorsionGroupLabel::cyclic(6));
    CHECK(torsionSubgroupQ(mordellCurve(-432)).label == TorsionGroupLabel::cyclic(3));
}

TEST_CASE("torsion subgroup structure details")
{
    // y^2 = x^3 - x: full two-torsion
    CurveQ c = CurveQ::shortForm(Rational(-1), Rational(0));
    TorsionSubgroup sub = torsionSubgroupQ(c);
    CHECK(sub.label == TorsionGroupLabel::two_by(2));
    CHECK(sub.points.size() == 4);

    // 11a1: y^2 + y = x^3 - x^2 - 10x - 20 has Z/5
    CurveQ c11(Rational(0), Rational(-1), Rational(1), Rational(-10), Rational(-20));
    CHECK(torsionSubgroupQ(c11).label == TorsionGroupLabel::cyclic(5));

    // X_1(11) = 11a3: y^2 + y = x^3 - x^2 also Z/5
    CurveQ c11b(Rational(0), Rational(-1), Rational(1), Rational(0), Rational(0));
    CHECK(torsionSubgroupQ(c11b).label == TorsionGroupLabel::cyclic(5));

    // 20a1: y^2 = x^3 + x^2 + 4x + 4 has Z/6
    CurveQ c20(Rational(0), Rational(1), Rational(0), Rational(4), Rational(4));
    CHECK(torsionSubgroupQ(c20).label == TorsionGroupLabel::cyclic(6));
}

TEST_CASE("torsion point list is a group")
{
    std::mt19937_64 rng(41);
    for (int i = 0; i < 30; ++i) {
        CurveQ c = oracles::randomSmoothCurve(rng, 8);
        TorsionSubgroup sub = torsionSubgroupQ(c);
        CHECK(std::size_t(sub.label.order()) == sub.points.size());
        for (const PointQ& p : sub.points) {
            CHECK(onCurve(c, p));
            CHECK(std::find(sub.points.begin(), sub.points.end(), negate(c, p)) != sub.points.end());
            for (const PointQ& q : sub.points) {
                PointQ s = add(c, p, q);
                CHECK(std::find(sub.points.begin(), sub.points.end(), s) != sub.points.end());
            }
        }
    }
}

TEST_CASE("torsion agrees with the Lutz-Nagell oracle")
{
    std::mt19937_64 rng(43);
    int done = 0;
    while (done < 15) {
        CurveQ c = oracles::randomSmoothCurve(rng, 20);
        TorsionSubgroup fast = torsionSubgroupQ(c);
        TorsionSubgroup oracle = oracles::lutzNagellTorsion(c);
        CHECK(sameGroup(fast, oracle));
        ++done;
    }
}

TEST_CASE("reduced group order matches brute force")
{
    std::mt19937_64 rng(47);
    for (int i = 0; i < 20; ++i) {
        CurveQ c = oracles::randomSmoothCurve(rng, 10);
        for (std::uint64_t l : {5ull, 7ull, 11ull, 13ull}) {
            auto fast = reducedGroupOrder(c, l);
            if (!fast)
                continue; // bad reduction
            CHECK(*fast == oracles::bruteForceReducedOrder(c, l));
        }
    }
}

TEST_CASE("torsion order bound is a multiple of the torsion order")
{
    std::mt19937_64 rng(53);
    for (int i = 0; i < 25; ++i) {
        CurveQ c = oracles::randomSmoothCurve(rng, 10);
        std::uint64_t bound = torsionOrderBound(c);
        if (bound == 0)
            continue;
        TorsionSubgroup sub = torsionSubgroupQ(c);
        CHECK(bound % std::uint64_t(sub.label.order()) == 0);
    }
}

TEST_CASE("all fifteen admissible structures are realized and match the oracle")
{
    // Tate normal form y^2 + (1-c)xy - by = x^3 - bx^2 puts (0,0) at a
    // prescribed order; the products come from y^2 = x(x+a)(x+b)
    auto tate = [](Rational b, Rational c) {
        return CurveQ(Rational(1) - c, -b, -b, Rational(0), Rational(0));
    };
    auto twoTors = [](long a, long b) {
        return CurveQ(Rational(0), Rational(a + b), Rational(0), Rational(a * b), Rational(0));
    };
    std::vector<std::pair<CurveQ, TorsionGroupLabel>> zoo = {
        {mordellCurve(2), TorsionGroupLabel::trivial()},
        {mordellCurve(8), TorsionGroupLabel::cyclic(2)},
        {mordellCurve(4), TorsionGroupLabel::cyclic(3)},
        {tate(Rational(1), Rational(0)), TorsionGroupLabel::cyclic(4)},
        {CurveQ(Rational(0), Rational(-1), Rational(1), Rational(0), Rational(0)),
         TorsionGroupLabel::cyclic(5)},
        {mordellCurve(1), TorsionGroupLabel::cyclic(6)},
        {tate(Rational(4), Rational(2)), TorsionGroupLabel::cyclic(7)},
        {tate(Rational(3), Rational(3, 2)), TorsionGroupLabel::cyclic(8)},
        {tate(Rational(12), Rational(4)), TorsionGroupLabel::cyclic(9)},
        {CurveQ(Rational(1), Rational(0), Rational(0), Rational(-45), Rational(81)),
         TorsionGroupLabel::cyclic(10)},
        {tate(Rational(10, 3), Rational(2)), TorsionGroupLabel::cyclic(12)},
        {CurveQ::shortForm(Rational(-1), Rational(0)), TorsionGroupLabel::two_by(2)},
        {twoTors(1, 4), TorsionGroupLabel::two_by(4)},
        {twoTors(5, 32), TorsionGroupLabel::two_by(6)},
        {twoTors(81, 256), TorsionGroupLabel::two_by(8)},
    };
    for (const auto& [curve, want] : zoo) {
        TorsionSubgroup sub = torsionSubgroupQ(curve);
        CHECK(sub.label == want);
        CHECK(sub.points.size() == std::size_t(want.order()));
        CHECK(oracles::lutzNagellTorsion(curve).label == want);
    }
}

TEST_CASE("x-coordinates of exact-order points")
{
    // y^2 = x^3 + 4: Z/3 generated by (0, 2)
    CurveQ c = mordellCurve(4);
    CHECK(exactOrderXs(c, 3) == std::vector<Rational>{Rational(0)});
    CHECK(exactOrderXs(c, 2).empty());
    CHECK(exactOrderXs(c, 6).empty());

    // y^2 = x^3 + 1: Z/6 = {inf, (2,+-3), (0,+-1), (-1,0)}
    CurveQ c1 = mordellCurve(1);
    CHECK(exactOrderXs(c1, 2) == std::vector<Rational>{Rational(-1)});
    CHECK(exactOrderXs(c1, 3) == std::vector<Rational>{Rational(0)});
    CHECK(exactOrderXs(c1, 6) == std::vector<Rational>{Rational(2)});
}

TEST_CASE("admissible labels only")
{
    std::mt19937_64 rng(59);
    for (int i = 0; i < 40; ++i) {
        CurveQ c = oracles::randomSmoothCurve(rng, 12);
        TorsionGroupLabel label = torsionSubgroupQ(c).label;
        if (label.product) {
            CHECK(label.n % 2 == 0);
            CHECK(label.n >= 2);
            CHECK(label.n <= 8);
        } else {
            CHECK(label.n >= 1);
            CHECK(label.n <= 12);
            CHECK(label.n != 11);
        }
    }
}
