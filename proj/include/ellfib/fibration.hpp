// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_FIBRATION_HPP
#define ELLFIB_FIBRATION_HPP

#include <vector>

#include "ellfib/curve.hpp"

namespace ellfib {

enum class BaseKind { P1, EllipticBase };

// An elliptic fibration presented as a Weierstrass curve over Q(t) with a
// smooth generic fiber.  Fibers live over rational base points t0; the
// fiber at t = infinity is never specialized (one affine chart).
class Fibration {
public:
    Fibration(CurveQt curve, BaseKind base = BaseKind::P1) : curve_(std::move(curve)), base_(base)
    {
        if (!curve_.isSmooth())
            throw SingularCurveError("Fibration: generic fiber is singular (disc = 0 in Q(t))");
    }

    const CurveQt& curve() const { return curve_; }
    BaseKind baseKind() const { return base_; }

private:
    CurveQt curve_;
    BaseKind base_;
};

// The rational part of the discriminant locus.
struct DiscLocusQ {
    std::vector<Rational> points;  // rational zeros of the disc numerator
                                   // plus rational poles of coefficients
    bool hasNonRationalPart = false; // disc numerator keeps a factor with
                                     // no rational root
    bool contains(const Rational& t0) const
    {
        for (const Rational& p : points)
            if (p == t0)
                return true;
        return false;
    }
};

// Discriminant of the generic fiber, reduced in Q(t).
RationalFunction discriminantFunction(const Fibration& fib);

DiscLocusQ discriminantLocusQ(const Fibration& fib);

// Is t0 a pole of some a-invariant?
bool hasCoefficientPole(const Fibration& fib, const Rational& t0);

// Coefficient-wise evaluation at t0.  Throws PoleError when an
// a-invariant has a pole at t0 and SingularFiberError when the fiber is
// singular there.
CurveQ specialize(const Fibration& fib, const Rational& t0);

// Coordinate-wise evaluation of a section point; the result lies on
// specialize(fib, t0).  Throws like specialize, plus PoleError for
// coordinate poles.
PointQ specializePoint(const Fibration& fib, const PointQt& p, const Rational& t0);

} // namespace ellfib

#endif
