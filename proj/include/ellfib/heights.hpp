// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_HEIGHTS_HPP
#define ELLFIB_HEIGHTS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ellfib/curve.hpp"
#include "ellfib/torsion.hpp"

namespace ellfib {

// A rational base point p/q in lowest terms, q >= 0, with infinity = (1, 0).
// 64-bit coordinates: bounded-height enumeration cannot reach larger ones.
struct P1Point {
    std::int64_t p = 0, q = 1;

    P1Point() = default;
    P1Point(std::int64_t p_, std::int64_t q_);

    static P1Point infinity() { return P1Point(1, 0); }
    bool isInfinity() const { return q == 0; }

    std::int64_t height() const { return std::max(p < 0 ? -p : p, q); }
    Rational toRational() const
    {
        if (isInfinity())
            throw ContractError("P1Point: infinity has no rational value");
        return Rational(p, q);
    }

    bool operator==(const P1Point& o) const { return p == o.p && q == o.q; }
    bool operator!=(const P1Point& o) const { return !(*this == o); }
    // enumeration order: height, then (p, q) lexicographic
    bool operator<(const P1Point& o) const
    {
        if (height() != o.height())
            return height() < o.height();
        if (p != o.p)
            return p < o.p;
        return q < o.q;
    }

    std::string str() const
    {
        if (isInfinity())
            return "inf";
        if (q == 1)
            return std::to_string(p);
        return std::to_string(p) + "/" + std::to_string(q);
    }
};

inline std::int64_t heightP1(const P1Point& p)
{
    return p.height();
}

// Streams every P1 point of height < x exactly once, ordered by height
// and then lexicographically by (p, q).
class P1Enumerator {
public:
    explicit P1Enumerator(double x);
    std::optional<P1Point> next();

private:
    void refill();
    std::int64_t limit_; // emit heights <= limit_
    std::int64_t h_ = 0;
    std::vector<P1Point> shell_;
    std::size_t idx_ = 0;
};

// All points of height exactly h, in (p, q) lexicographic order.
std::vector<P1Point> p1HeightShell(std::int64_t h);

// N(x) = #{P : H(P) < x}.
std::uint64_t countP1(double x);

std::vector<P1Point> enumerateP1(double x);

struct FitResult {
    double exponent = 0;
    double constant = 0;
    double residual = 0;
};

// Least-squares fit of log N against log x: N ~ constant * x^exponent.
// Requires at least 3 samples with x, N > 0.
FitResult fitSchanuel(const std::vector<std::pair<double, double>>& counts);

// Least-squares fit of log N against log log x (counts on an elliptic
// base grow like a power of log x).  Requires x > 1.
FitResult fitNeron(const std::vector<std::pair<double, double>>& counts);

struct CanonicalHeight {
    double value = 0;      // limit of 4^-k log H(x(2^k P))
    double errorBound = 0; // reported bound from the stopping rule
    int iterations = 0;
};

inline constexpr double kCanonicalHeightTolerance = 1e-3;
inline constexpr int kCanonicalHeightMaxDoublings = 8;

// Canonical height via the doubling limit with exact arithmetic, using
// the multiplicative-height normalization hhat(P) = lim 4^-k log H(x(2^k P)).
// Torsion points come out as 0 within the tolerance.
CanonicalHeight canonicalHeight(const CurveQ& curve, const PointQ& p);

// A user-asserted Mordell-Weil basis: generators are taken to be
// independent and of infinite order; completeness is not verified.
struct MWBasis {
    CurveQ curve;
    std::vector<PointQ> generators;
    std::vector<PointQ> torsion; // nontrivial torsion points

    void validate() const; // on-curve and order checks
    int rank() const { return int(generators.size()); }
};

// All points n1 P1 + ... + nr Pr + T with multiplicative height
// H = exp(2 hhat) < x, i.e. hhat < log(x) / 2.  Each point once, assuming
// the asserted independence.  Requires x > 1.
std::vector<PointQ> enumerateMW(const MWBasis& basis, double x);

std::uint64_t countMW(const MWBasis& basis, double x);

} // namespace ellfib

#endif
