// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_SECTIONS_HPP
#define ELLFIB_SECTIONS_HPP

#include <string>
#include <vector>

#include "ellfib/fibration.hpp"

namespace ellfib {

// A torsion section of the fibration: (x(t), y(t)) satisfies the
// Weierstrass equation identically in Q(t) and has exact order `order`
// under the Q(t) group law.
struct TorsionSection {
    RationalFunction x, y;
    int order = 2;

    PointQt point() const { return PointQt(x, y); }
};

struct SectionSearchOptions {
    int nMax = 12;
    int degBound = 8;
    std::size_t ambiguityBudget = 100000; // cap on prod |S_i| per matching stage
    std::size_t rootBudget = 1u << 22;
};

struct SectionSearchResult {
    std::vector<TorsionSection> sections;
    std::vector<std::string> warnings; // e.g. fiberwise torsion everywhere but
                                       // nothing within the degree bound
};

// Finds all torsion sections of order <= nMax whose coordinates have
// numerator and denominator degree <= degBound:
//  * sample smooth fibers along the base point enumeration;
//  * collect the x-coordinates of exact-order-n points on each fiber;
//  * reconstruct candidate x(t) by solving the homogeneous interpolation
//    system a(t_i) - x_i b(t_i) = 0 over Q, staged by degree so a section
//    is caught at its minimal degree;
//  * validate candidates on held-out fibers, recover y(t) exactly, and
//    verify the order symbolically with the Q(t) group law.
SectionSearchResult findTorsionSections(const Fibration& fib, const SectionSearchOptions& opts = {});

// True iff the on-curve identity holds in Q(t) and the claimed order is
// exact under the Q(t) group law.
bool verifySection(const Fibration& fib, const TorsionSection& s);

struct SweepViolation {
    Rational t0;
    int observedOrder = 0; // 0 = specialization failed
};

struct SweepReport {
    int requested = 0;
    int checked = 0;
    std::vector<SweepViolation> violations;
    bool clean() const { return violations.empty(); }
};

// Specializes the section at `count` smooth base points of increasing
// height (skipping singular fibers and coordinate poles) and checks that
// the specialized point has order exactly s.order.
SweepReport injectivitySweep(const Fibration& fib, const TorsionSection& s, int count);

} // namespace ellfib

#endif
