// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_CURVE_HPP
#define ELLFIB_CURVE_HPP

#include <optional>
#include <string>

#include "ellfib/errors.hpp"
#include "ellfib/ratfunc.hpp"
#include "ellfib/rational.hpp"

namespace ellfib {

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over an exact field F
// (F is Rational or RationalFunction).  Construction does not require a
// nonzero discriminant; the group law does.
template <class F>
struct WeierstrassCurve {
    F a1, a2, a3, a4, a6;

    WeierstrassCurve() : a1(0), a2(0), a3(0), a4(0), a6(0) {}
    WeierstrassCurve(F a1_, F a2_, F a3_, F a4_, F a6_)
        : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_))
    {
    }
    // short form y^2 = x^3 + A x + B
    static WeierstrassCurve shortForm(F A, F B)
    {
        return WeierstrassCurve(F(0), F(0), F(0), std::move(A), std::move(B));
    }

    F b2() const { return a1 * a1 + F(4) * a2; }
    F b4() const { return F(2) * a4 + a1 * a3; }
    F b6() const { return a3 * a3 + F(4) * a6; }
    F b8() const
    {
        return a1 * a1 * a6 + F(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    F c4() const
    {
        F b2v = b2();
        return b2v * b2v - F(24) * b4();
    }
    F c6() const
    {
        F b2v = b2();
        return -(b2v * b2v * b2v) + F(36) * b2v * b4() - F(216) * b6();
    }
    F discriminant() const
    {
        F b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
        return -(b2v * b2v * b8v) - F(8) * b4v * b4v * b4v - F(27) * b6v * b6v + F(9) * b2v * b4v * b6v;
    }
    bool isSmooth() const { return !discriminant().isZero(); }

    F jInvariant() const
    {
        F d = discriminant();
        if (d.isZero())
            throw SingularCurveError("j-invariant of a singular curve");
        F c = c4();
        return c * c * c / d;
    }

    bool operator==(const WeierstrassCurve& o) const
    {
        return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
    }
};

template <class F>
struct CurveInvariants {
    F b2, b4, b6, b8, disc;
    std::optional<F> j; // absent when disc = 0
};

template <class F>
CurveInvariants<F> invariants(const WeierstrassCurve<F>& c)
{
    CurveInvariants<F> inv{c.b2(), c.b4(), c.b6(), c.b8(), c.discriminant(), std::nullopt};
    if (!inv.disc.isZero())
        inv.j = c.jInvariant();
    return inv;
}

template <class F>
struct Point {
    bool infinite = true;
    F x{0}, y{0};

    Point() = default;
    Point(F x_, F y_) : infinite(false), x(std::move(x_)), y(std::move(y_)) {}
    static Point infinity() { return Point(); }

    bool isInfinity() const { return infinite; }
    bool operator==(const Point& o) const
    {
        if (infinite || o.infinite)
            return infinite == o.infinite;
        return x == o.x && y == o.y;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

template <class F>
bool onCurve(const WeierstrassCurve<F>& c, const Point<F>& p)
{
    if (p.infinite)
        return true;
    F lhs = p.y * p.y + c.a1 * p.x * p.y + c.a3 * p.y;
    F rhs = p.x * p.x * p.x + c.a2 * p.x * p.x + c.a4 * p.x + c.a6;
    return lhs == rhs;
}

template <class F>
Point<F> negate(const WeierstrassCurve<F>& c, const Point<F>& p)
{
    if (p.infinite)
        return p;
    return Point<F>(p.x, -p.y - c.a1 * p.x - c.a3);
}

// Chord-tangent addition.  Requires a smooth curve and on-curve inputs.
template <class F>
Point<F> add(const WeierstrassCurve<F>& c, const Point<F>& p, const Point<F>& q)
{
    if (!c.isSmooth())
        throw SingularCurveError("group law on a singular curve");
    if (!onCurve(c, p) || !onCurve(c, q))
        throw ContractError("add: point not on curve");
    if (p.infinite)
        return q;
    if (q.infinite)
        return p;
    if (p.x == q.x && q.y == -p.y - c.a1 * p.x - c.a3)
        return Point<F>::infinity();

    F lambda, nu;
    if (p.x == q.x) {
        // tangent; the denominator is nonzero because q != -p
        F den = F(2) * p.y + c.a1 * p.x + c.a3;
        lambda = (F(3) * p.x * p.x + F(2) * c.a2 * p.x + c.a4 - c.a1 * p.y) / den;
        nu = (-(p.x * p.x * p.x) + c.a4 * p.x + F(2) * c.a6 - c.a3 * p.y) / den;
    } else {
        F den = q.x - p.x;
        lambda = (q.y - p.y) / den;
        nu = (p.y * q.x - q.y * p.x) / den;
    }
    F x3 = lambda * lambda + c.a1 * lambda - c.a2 - p.x - q.x;
    F y3 = -(lambda + c.a1) * x3 - nu - c.a3;
    return Point<F>(x3, y3);
}

template <class F>
Point<F> sub(const WeierstrassCurve<F>& c, const Point<F>& p, const Point<F>& q)
{
    return add(c, p, negate(c, q));
}

template <class F>
Point<F> scalarMul(const WeierstrassCurve<F>& c, long n, const Point<F>& p)
{
    if (n < 0)
        return scalarMul(c, -n, negate(c, p));
    Point<F> acc = Point<F>::infinity();
    Point<F> base = p;
    while (n) {
        if (n & 1)
            acc = add(c, acc, base);
        n >>= 1;
        if (n)
            base = add(c, base, base);
    }
    return acc;
}

using CurveQ = WeierstrassCurve<Rational>;
using CurveQt = WeierstrassCurve<RationalFunction>;
using PointQ = Point<Rational>;
using PointQt = Point<RationalFunction>;

} // namespace ellfib

#endif
