// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_CENSUS_HPP
#define ELLFIB_CENSUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "ellfib/fibration.hpp"
#include "ellfib/heights.hpp"
#include "ellfib/torsion.hpp"

namespace ellfib {

enum class FiberStatus { Smooth, Singular, Pole };

inline const char* fiberStatusName(FiberStatus s)
{
    switch (s) {
    case FiberStatus::Smooth: return "smooth";
    case FiberStatus::Singular: return "singular";
    default: return "pole";
    }
}

// One fiber of the sweep.  `torsion` is present exactly when the fiber
// is smooth.
struct CensusRecord {
    std::variant<P1Point, PointQ> base;
    double height = 0;
    FiberStatus status = FiberStatus::Smooth;
    std::optional<TorsionGroupLabel> torsion;

    // affine base parameter t0 (P1 point or x-coordinate of the MW point)
    Rational t0() const
    {
        if (auto* p = std::get_if<P1Point>(&base))
            return p->toRational();
        return std::get<PointQ>(base).x;
    }
};

// Aggregate of a census at bound x.  N counts the enumerated affine base
// points (the fiber at t = infinity is excluded), M the smooth fibers
// with nontrivial torsion.  lambdaHat = log M / log N when M >= 1 and
// N >= 2.
struct CensusSummary {
    double x = 0;
    std::uint64_t N = 0;
    std::uint64_t M = 0;
    std::optional<double> lambdaHat;
    std::map<TorsionGroupLabel, std::uint64_t> histogram;
};

enum class Verdict { Above, Near, Below };

inline const char* verdictName(Verdict v)
{
    switch (v) {
    case Verdict::Above: return "above";
    case Verdict::Near: return "near";
    default: return "below";
    }
}

struct CensusOptions {
    int jobs = 1;
    std::size_t rootBudget = 1u << 22;
    bool keepRecords = true; // false: streaming counts only
};

// Streaming result: the summary plus the base parameters of the
// torsion-bearing fibers in enumeration order.
struct CensusStats {
    CensusSummary summary;
    std::vector<Rational> torsionT0; // P1 base
    std::vector<PointQ> torsionBase; // elliptic base
    std::vector<CensusRecord> records; // filled iff keepRecords
};

// Sweeps all base points of height < x: one record per point, in
// enumeration order (height, then lexicographic).  Singular fibers and
// coefficient poles are records, not errors.  Torsion computations that
// would exceed the work budget abort the run with WorkBudgetError.
CensusStats runCensusStats(const Fibration& fib, double x, const CensusOptions& opts = {});
CensusStats runCensusStats(const Fibration& fib, const MWBasis& base, double x,
                           const CensusOptions& opts = {});

std::vector<CensusRecord> runCensus(const Fibration& fib, double x, const CensusOptions& opts = {});
std::vector<CensusRecord> runCensus(const Fibration& fib, const MWBasis& base, double x,
                                    const CensusOptions& opts = {});

CensusSummary summarize(const std::vector<CensusRecord>& records, double x);

Verdict thresholdReport(const CensusSummary& summary, double margin = 0.05);

} // namespace ellfib

#endif
