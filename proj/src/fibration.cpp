// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/fibration.hpp"

#include <algorithm>

namespace ellfib {

RationalFunction discriminantFunction(const Fibration& fib)
{
    return fib.curve().discriminant();
}

DiscLocusQ discriminantLocusQ(const Fibration& fib)
{
    DiscLocusQ out;
    RationalFunction disc = discriminantFunction(fib);

    const Polynomial& num = disc.num();
    if (num.degree() > 0) {
        // divide out every rational root with multiplicity; whatever is
        // left of positive degree has no rational zero
        Polynomial rem = num.monic();
        for (const Rational& r : rationalRoots(num)) {
            out.points.push_back(r);
            Polynomial lin(std::vector<Rational>{-r, Rational(1l)});
            while (true) {
                auto [q, rr] = rem.divrem(lin);
                if (!rr.isZero())
                    break;
                rem = q;
            }
        }
        out.hasNonRationalPart = rem.degree() > 0;
    }

    const CurveQt& c = fib.curve();
    for (const RationalFunction* a : {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6}) {
        if (a->den().degree() > 0)
            for (const Rational& r : rationalRoots(a->den()))
                out.points.push_back(r);
    }

    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

bool hasCoefficientPole(const Fibration& fib, const Rational& t0)
{
    const CurveQt& c = fib.curve();
    for (const RationalFunction* a : {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6})
        if (a->hasPoleAt(t0))
            return true;
    return false;
}

CurveQ specialize(const Fibration& fib, const Rational& t0)
{
    const CurveQt& c = fib.curve();
    Rational a[5];
    const RationalFunction* src[5] = {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6};
    for (int i = 0; i < 5; ++i) {
        auto v = src[i]->eval(t0);
        if (!v)
            throw PoleError("specialize: coefficient pole at t = " + t0.str());
        a[i] = *v;
    }
    CurveQ fiber(a[0], a[1], a[2], a[3], a[4]);
    if (!fiber.isSmooth())
        throw SingularFiberError("specialize: singular fiber at t = " + t0.str());
    return fiber;
}

PointQ specializePoint(const Fibration& fib, const PointQt& p, const Rational& t0)
{
    CurveQ fiber = specialize(fib, t0);
    if (p.isInfinity())
        return PointQ::infinity();
    auto x = p.x.eval(t0);
    auto y = p.y.eval(t0);
    if (!x || !y)
        throw PoleError("specializePoint: coordinate pole at t = " + t0.str());
    PointQ q(*x, *y);
    if (!onCurve(fiber, q))
        throw ContractError("specializePoint: specialized point is off the fiber");
    return q;
}

} // namespace ellfib
