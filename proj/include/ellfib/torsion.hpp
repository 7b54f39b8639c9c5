// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_TORSION_HPP
#define ELLFIB_TORSION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellfib/curve.hpp"

namespace ellfib {

// One of the fifteen torsion group structures over Q: cyclic Z/n for
// n in {1..10, 12}, or Z/2 x Z/2m for m in {1..4}.
struct TorsionGroupLabel {
    bool product = false; // false: cyclic Z/n; true: Z/2 x Z/n with n = 2m
    int n = 1;            // cyclic order, or the larger factor 2m

    TorsionGroupLabel() = default;
    TorsionGroupLabel(bool product_, int n_) : product(product_), n(n_) {}

    static TorsionGroupLabel trivial() { return {false, 1}; }
    static TorsionGroupLabel cyclic(int n) { return {false, n}; }
    static TorsionGroupLabel two_by(int twoM) { return {true, twoM}; }

    bool isTrivial() const { return !product && n == 1; }
    int order() const { return product ? 2 * n : n; }

    std::string str() const
    {
        if (isTrivial())
            return "trivial";
        if (!product)
            return "Z/" + std::to_string(n);
        return "Z/2xZ/" + std::to_string(n);
    }

    bool operator==(const TorsionGroupLabel& o) const { return product == o.product && n == o.n; }
    bool operator!=(const TorsionGroupLabel& o) const { return !(*this == o); }
    bool operator<(const TorsionGroupLabel& o) const
    {
        if (order() != o.order())
            return order() < o.order();
        return product < o.product;
    }
};

// Orders of rational torsion points allowed by Mazur's classification.
inline constexpr int kMaxTorsionOrder = 12;
inline constexpr int kAdmissibleOrders[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12};

// Smallest n <= 12 with nP = infinity, or nullopt ("not torsion").
// Requires a smooth curve and an on-curve point.
std::optional<int> pointOrder(const CurveQ& curve, const PointQ& p);

// Upper bound for the torsion order: gcd of #E(F_l) over a few odd primes
// of good reduction (torsion injects into every such reduction).  Returns
// 0 when no usable prime was found (no information).
std::uint64_t torsionOrderBound(const CurveQ& curve);

// Number of points of the reduction of `curve` mod l (l an odd prime not
// dividing any coefficient denominator), including the point at infinity;
// nullopt if the reduction is unusable (bad denominator or singular).
std::optional<std::uint64_t> reducedGroupOrder(const CurveQ& curve, std::uint64_t l);

struct TorsionSubgroup {
    TorsionGroupLabel label;
    std::vector<PointQ> points; // the full group, infinity first
};

struct TorsionOptions {
    std::uint64_t orderBoundHint = 0; // 0 = compute internally
    std::size_t rootBudget = 1u << 22;
};

// Complete rational torsion subgroup: x-candidates from the rational
// roots of the division polynomials, y recovered from the curve equation,
// orders verified exactly.  Requires a smooth curve.
TorsionSubgroup torsionSubgroupQ(const CurveQ& curve, const TorsionOptions& opts = {});

// x-coordinates of the rational points of exact order n, sorted.
std::vector<Rational> exactOrderXs(const CurveQ& curve, int n, std::size_t rootBudget = 1u << 22);

// Rational points with the given x-coordinate (0, 1 or 2 of them).
std::vector<PointQ> pointsWithX(const CurveQ& curve, const Rational& x);

} // namespace ellfib

#endif
