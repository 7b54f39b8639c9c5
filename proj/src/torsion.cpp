// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "ellfib/divpoly.hpp"

namespace ellfib {

std::optional<int> pointOrder(const CurveQ& curve, const PointQ& p)
{
    if (!curve.isSmooth())
        throw SingularCurveError("pointOrder on a singular curve");
    if (!onCurve(curve, p))
        throw ContractError("pointOrder: point not on curve");
    if (p.isInfinity())
        return 1;
    PointQ acc = p;
    for (int n = 2; n <= kMaxTorsionOrder; ++n) {
        acc = add(curve, acc, p);
        if (acc.isInfinity())
            return n;
    }
    return std::nullopt;
}

namespace {

// residue of a rational mod l, or nullopt if l divides the denominator
std::optional<std::uint64_t> residueMod(const Rational& r, std::uint64_t l)
{
    std::uint64_t den = mpz_fdiv_ui(r.den().get_mpz_t(), l);
    if (den == 0)
        return std::nullopt;
    std::uint64_t num = mpz_fdiv_ui(r.num().get_mpz_t(), l);
    // den^(l-2) mod l
    std::uint64_t inv = 1, base = den % l, e = l - 2;
    while (e) {
        if (e & 1)
            inv = (__uint128_t(inv) * base) % l;
        base = (__uint128_t(base) * base) % l;
        e >>= 1;
    }
    return (__uint128_t(num) * inv) % l;
}

} // namespace

std::optional<std::uint64_t> reducedGroupOrder(const CurveQ& curve, std::uint64_t l)
{
    if (l < 3)
        return std::nullopt;
    std::uint64_t a[5];
    const Rational* coeffs[5] = {&curve.a1, &curve.a2, &curve.a3, &curve.a4, &curve.a6};
    for (int i = 0; i < 5; ++i) {
        auto r = residueMod(*coeffs[i], l);
        if (!r)
            return std::nullopt;
        a[i] = *r;
    }
    // quadratic-character table
    std::vector<int> chi(l, -1);
    chi[0] = 0;
    for (std::uint64_t v = 1; v <= (l - 1) / 2; ++v)
        chi[(__uint128_t(v) * v) % l] = 1;

    // discriminant mod l via the b-invariants
    auto mul = [l](std::uint64_t x, std::uint64_t y) { return std::uint64_t((__uint128_t(x) * y) % l); };
    auto addm = [l](std::uint64_t x, std::uint64_t y) { return (x + y) % l; };
    auto subm = [l](std::uint64_t x, std::uint64_t y) { return (x + l - y % l) % l; };
    std::uint64_t b2 = addm(mul(a[0], a[0]), mul(4, a[1]));
    std::uint64_t b4 = addm(mul(2, a[3]), mul(a[0], a[2]));
    std::uint64_t b6 = addm(mul(a[2], a[2]), mul(4, a[4]));
    std::uint64_t b8 = subm(addm(addm(mul(mul(a[0], a[0]), a[4]), mul(mul(4, a[1]), a[4])),
                                 mul(a[1], mul(a[2], a[2]))),
                            addm(mul(a[0], mul(a[2], a[3])), mul(a[3], a[3])));
    std::uint64_t disc = subm(mul(9, mul(b2, mul(b4, b6))),
                              addm(addm(mul(mul(b2, b2), b8), mul(8, mul(b4, mul(b4, b4)))),
                                   mul(27, mul(b6, b6))));
    if (disc == 0)
        return std::nullopt;

    // #E(F_l) = l + 1 + sum_x chi((a1 x + a3)^2 + 4 f(x))
    long sum = 0;
    for (std::uint64_t x = 0; x < l; ++x) {
        std::uint64_t rhs = addm(mul(x, mul(x, x)), addm(mul(a[1], mul(x, x)), addm(mul(a[3], x), a[4])));
        std::uint64_t t = addm(mul(a[0], x), a[2]);
        std::uint64_t d = addm(mul(t, t), mul(4, rhs));
        sum += chi[d];
    }
    return std::uint64_t(long(l) + 1 + sum);
}

std::uint64_t torsionOrderBound(const CurveQ& curve)
{
    static const std::uint64_t primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    std::uint64_t g = 0;
    int used = 0;
    for (std::uint64_t l : primes) {
        auto n = reducedGroupOrder(curve, l);
        if (!n)
            continue;
        g = std::gcd(g, *n);
        if (++used >= 5 || g == 1)
            break;
    }
    return g;
}

std::vector<PointQ> pointsWithX(const CurveQ& curve, const Rational& x)
{
    // y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
    Rational b = curve.a1 * x + curve.a3;
    Rational rhs = x * x * x + curve.a2 * x * x + curve.a4 * x + curve.a6;
    Rational disc = b * b + Rational(4) * rhs;
    auto s = disc.sqrt();
    if (!s)
        return {};
    Rational half(1, 2);
    std::vector<PointQ> out;
    Rational y1 = (-b + *s) * half;
    out.emplace_back(x, y1);
    if (!s->isZero())
        out.emplace_back(x, (-b - *s) * half);
    return out;
}

namespace {

// x-candidates for points of order dividing n (excluding infinity)
std::vector<Rational> torsionXCandidates(DivisionPolynomials<Rational>& dp, int n, std::size_t budget)
{
    std::vector<Rational> xs;
    if (n % 2 == 0) {
        for (auto& r : rationalRoots(dp.twoTorsionCubic(), budget))
            xs.push_back(r);
    }
    const Poly<Rational>& fn = dp.f(std::size_t(n));
    if (!fn.isConstant())
        for (auto& r : rationalRoots(fn, budget))
            xs.push_back(r);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace

std::vector<Rational> exactOrderXs(const CurveQ& curve, int n, std::size_t rootBudget)
{
    DivisionPolynomials<Rational> dp(curve);
    std::vector<Rational> out;
    for (const Rational& x : torsionXCandidates(dp, n, rootBudget)) {
        for (const PointQ& p : pointsWithX(curve, x)) {
            auto ord = pointOrder(curve, p);
            if (ord && *ord == n) {
                out.push_back(x);
                break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TorsionSubgroup torsionSubgroupQ(const CurveQ& curve, const TorsionOptions& opts)
{
    if (!curve.isSmooth())
        throw SingularCurveError("torsionSubgroupQ on a singular curve");

    std::uint64_t bound = opts.orderBoundHint ? opts.orderBoundHint : torsionOrderBound(curve);

    DivisionPolynomials<Rational> dp(curve);
    std::vector<PointQ> points{PointQ::infinity()};
    std::vector<int> orders{1};
    bool haveOrder[kMaxTorsionOrder + 1] = {};
    haveOrder[1] = true;

    for (int n : kAdmissibleOrders) {
        if (bound != 0 && bound % std::uint64_t(n) != 0)
            continue;
        // a point of exact order n forces points of every smaller order
        // dividing n; skip n whose prerequisites already failed
        bool feasible = true;
        for (int d = 2; d < n; ++d)
            if (n % d == 0 && !haveOrder[d])
                feasible = false;
        if (!feasible)
            continue;

        for (const Rational& x : torsionXCandidates(dp, n, opts.rootBudget)) {
            bool known = false;
            for (const PointQ& p : points)
                if (!p.isInfinity() && p.x == x) {
                    known = true;
                    break;
                }
            if (known)
                continue;
            for (const PointQ& p : pointsWithX(curve, x)) {
                auto ord = pointOrder(curve, p);
                if (ord && *ord == n) {
                    points.push_back(p);
                    orders.push_back(n);
                    haveOrder[n] = true;
                }
            }
        }
    }

    // group structure from the number of involutions
    int twoTorsion = 0, maxOrder = 1;
    for (int o : orders) {
        if (o == 2)
            ++twoTorsion;
        maxOrder = std::max(maxOrder, o);
    }
    TorsionSubgroup result;
    result.points = std::move(points);
    std::size_t size = result.points.size();
    if (twoTorsion == 3) {
        result.label = TorsionGroupLabel::two_by(int(size) / 2);
        if (std::size_t(result.label.order()) != size || maxOrder != int(size) / 2)
            throw Error("torsionSubgroupQ: inconsistent group structure");
    } else {
        result.label = TorsionGroupLabel::cyclic(maxOrder);
        if (std::size_t(maxOrder) != size)
            throw Error("torsionSubgroupQ: inconsistent group structure");
    }
    return result;
}

} // namespace ellfib
