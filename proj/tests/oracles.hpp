// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

// Independent oracles used by the test suites.  Everything here computes
// expected values by a route different from the library implementation
// it checks.

#ifndef ELLFIB_TESTS_ORACLES_HPP
#define ELLFIB_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <tuple>
#include <utility>

#include "ellfib/curve.hpp"
#include "ellfib/torsion.hpp"

namespace ellfib::oracles {

// Discriminant of y^2 = x^3 + Ax + B by the short-form formula.
template <class F>
F shortFormDiscriminant(const F& A, const F& B)
{
    return F(-16) * (F(4) * A * A * A + F(27) * B * B);
}

// Torsion subgroup by the Lutz-Nagell search: integralize, move to a
// short model Y^2 = X^3 + AX + B over Z, enumerate integral candidates
// with Y = 0 or Y^2 | disc, verify orders by the group law.
TorsionSubgroup lutzNagellTorsion(const CurveQ& curve);

// #{(p, q) : H < x} by scanning all pairs |p|, |q| < x.
std::uint64_t bruteForceP1Count(double x);

// Number of points of the reduction mod l by scanning all (x, y) pairs.
std::uint64_t bruteForceReducedOrder(const CurveQ& curve, std::uint64_t l);

// True if some g = (a t^2 + b t + c) / (d t + e) with coefficients in
// {-bound..bound} squares to f.  Exercises the none-claims of
// squareRootInQt against a concrete low-degree candidate family.
bool lowDegreeSquareExists(const RationalFunction& f, int bound = 3);

// random small rationals / curves, deterministic for a fixed seed
Rational randomRational(std::mt19937_64& rng, long range, bool allowZero = true);

// Random smooth curve with integer a-invariants in [-range, range].
CurveQ randomSmoothCurve(std::mt19937_64& rng, long range);

// Random smooth curve passing through the returned point (and, for the
// two-point variant, through both).
std::pair<CurveQ, PointQ> randomCurveWithPoint(std::mt19937_64& rng, long range);
std::tuple<CurveQ, PointQ, PointQ> randomCurveWithTwoPoints(std::mt19937_64& rng, long range);

} // namespace ellfib::oracles

#endif
