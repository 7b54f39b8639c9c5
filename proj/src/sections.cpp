// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/sections.hpp"

#include <algorithm>
#include <map>

#include "ellfib/heights.hpp"
#include "ellfib/torsion.hpp"

namespace ellfib {

namespace {

// Kernel basis of a rational matrix (rows x cols), by Gauss-Jordan.
std::vector<std::vector<Rational>> kernelBasis(std::vector<std::vector<Rational>> m, std::size_t cols)
{
    std::vector<std::size_t> pivotCol;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col].isZero())
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[row]);
        Rational inv = m[row][col].inverse();
        for (std::size_t j = col; j < cols; ++j)
            m[row][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].isZero())
                continue;
            Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[row][j];
        }
        pivotCol.push_back(col);
        ++row;
    }
    std::vector<bool> isPivot(cols, false);
    for (std::size_t c : pivotCol)
        isPivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t freeCol = 0; freeCol < cols; ++freeCol) {
        if (isPivot[freeCol])
            continue;
        std::vector<Rational> v(cols, Rational());
        v[freeCol] = Rational(1l);
        for (std::size_t r = 0; r < pivotCol.size(); ++r)
            v[pivotCol[r]] = -m[r][freeCol];
        basis.push_back(std::move(v));
    }
    return basis;
}

// sample fibers: base parameter plus x-coordinates of exact-order-n points
struct SampleFiber {
    Rational t;
    std::map<int, std::vector<Rational>> xsByOrder;

    const std::vector<Rational>* xs(int n) const
    {
        auto it = xsByOrder.find(n);
        return it == xsByOrder.end() ? nullptr : &it->second;
    }
};

std::vector<SampleFiber> sampleFibers(const Fibration& fib, std::size_t count, std::size_t rootBudget)
{
    DiscLocusQ locus = discriminantLocusQ(fib);
    // skipped alongside the locus: fibers at these values can carry
    // extra torsion that inflates the matching sets
    const Rational skip[] = {Rational(0l), Rational(1l), Rational(-432l)};

    std::vector<SampleFiber> out;
    for (std::int64_t h = 1; out.size() < count; ++h) {
        if (h > 1000000)
            throw Error("sampleFibers: could not collect enough smooth fibers");
        for (const P1Point& pt : p1HeightShell(h)) {
            if (out.size() >= count)
                break;
            if (pt.isInfinity())
                continue;
            Rational t0 = pt.toRational();
            if (locus.contains(t0) || hasCoefficientPole(fib, t0))
                continue;
            if (std::find(std::begin(skip), std::end(skip), t0) != std::end(skip))
                continue;
            SampleFiber fiber;
            fiber.t = t0;
            TorsionOptions topts;
            topts.rootBudget = rootBudget;
            CurveQ c = specialize(fib, t0);
            TorsionSubgroup sub = torsionSubgroupQ(c, topts);
            for (const PointQ& p : sub.points) {
                if (p.isInfinity())
                    continue;
                int ord = *pointOrder(c, p);
                auto& xs = fiber.xsByOrder[ord];
                if (std::find(xs.begin(), xs.end(), p.x) == xs.end())
                    xs.push_back(p.x);
            }
            for (auto& [ord, xs] : fiber.xsByOrder)
                std::sort(xs.begin(), xs.end());
            out.push_back(std::move(fiber));
        }
    }
    return out;
}

// y(t) with y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6, if rational
std::optional<RationalFunction> recoverY(const CurveQt& c, const RationalFunction& x)
{
    RationalFunction b = c.a1 * x + c.a3;
    RationalFunction rhs = x * x * x + c.a2 * x * x + c.a4 * x + c.a6;
    RationalFunction disc = b * b + RationalFunction(4l) * rhs;
    auto s = squareRootInQt(disc);
    if (!s)
        return std::nullopt;
    RationalFunction half(Rational(1, 2));
    return (-b + *s) * half;
}

bool hasExactOrder(const CurveQt& c, const PointQt& p, int n)
{
    PointQt acc = p;
    for (int k = 1; k < n; ++k) {
        if (acc.isInfinity())
            return false;
        acc = add(c, acc, p);
    }
    return acc.isInfinity();
}

// Torsion over Q(t) injects into the group of every smooth fiber, so it
// is one of the fifteen admissible groups.  Maximum number of distinct
// x-coordinates of exact-order-n elements over those groups; reaching it
// ends the search for that order.
int maxSectionXs(int n)
{
    switch (n) {
    case 2: return 3;  // full two-torsion
    case 3: return 1;
    case 4: return 2;  // Z/2 x Z/8
    case 5: return 2;
    case 6: return 3;  // Z/2 x Z/6
    case 7: return 3;
    case 8: return 4;  // Z/2 x Z/8
    case 9: return 3;
    case 10: return 2;
    default: return 2; // 12
    }
}

} // namespace

bool verifySection(const Fibration& fib, const TorsionSection& s)
{
    if (s.order < 2 || s.order > kMaxTorsionOrder)
        return false;
    const CurveQt& c = fib.curve();
    PointQt p = s.point();
    if (!onCurve(c, p))
        return false;
    return hasExactOrder(c, p, s.order);
}

SectionSearchResult findTorsionSections(const Fibration& fib, const SectionSearchOptions& opts)
{
    if (opts.nMax < 2 || opts.nMax > kMaxTorsionOrder)
        throw ContractError("findTorsionSections: nMax must be in 2..12");
    if (opts.degBound < 0)
        throw ContractError("findTorsionSections: degBound must be >= 0");

    const std::size_t nSamples = 2 * std::size_t(opts.degBound) + 3;
    std::vector<SampleFiber> fibers = sampleFibers(fib, nSamples, opts.rootBudget);
    const CurveQt& curve = fib.curve();

    SectionSearchResult result;
    auto known = [&](const RationalFunction& x) {
        for (const TorsionSection& s : result.sections)
            if (s.x == x)
                return true;
        return false;
    };

    for (int n : kAdmissibleOrders) {
        if (n > opts.nMax)
            break;
        // a section of order n meets every smooth fiber in a rational
        // point of exact order n, so one empty fiber set settles it
        bool allNonEmpty = true;
        for (const SampleFiber& f : fibers)
            if (!f.xs(n) || f.xs(n)->empty()) {
                allNonEmpty = false;
                break;
            }
        if (!allNonEmpty)
            continue;

        int foundAtN = 0;
        for (int d = 0; d <= opts.degBound && foundAtN < maxSectionXs(n); ++d) {
            const std::size_t m = 2 * std::size_t(d) + 2; // matching fibers
            std::size_t product = 1;
            for (std::size_t i = 0; i < m; ++i) {
                product *= fibers[i].xs(n)->size();
                if (product > opts.ambiguityBudget)
                    throw AmbiguityBudgetError("findTorsionSections: order " + std::to_string(n) +
                                               ", degree " + std::to_string(d) + ": " +
                                               std::to_string(product) + " assignments exceed budget");
            }

            // odometer over one x-choice per matching fiber
            std::vector<std::size_t> choice(m, 0);
            while (true) {
                // homogeneous system a(t_i) - x_i b(t_i) = 0
                const std::size_t cols = 2 * std::size_t(d) + 2;
                std::vector<std::vector<Rational>> mat(m, std::vector<Rational>(cols));
                for (std::size_t i = 0; i < m; ++i) {
                    const Rational& ti = fibers[i].t;
                    const Rational& xi = (*fibers[i].xs(n))[choice[i]];
                    Rational pw(1l);
                    for (int j = 0; j <= d; ++j) {
                        mat[i][std::size_t(j)] = pw;
                        mat[i][std::size_t(d + 1 + j)] = -xi * pw;
                        pw *= ti;
                    }
                }
                // a section of minimal degree d gives kernel dimension
                // exactly 1 for its own assignment (a b' - a' b has degree
                // <= 2d but vanishes at 2d+2 sample points); larger kernels
                // only arise from mixed assignments and carry no section
                auto kernel = kernelBasis(std::move(mat), cols);
                if (kernel.size() == 1) {
                    std::vector<Rational> av(kernel[0].begin(), kernel[0].begin() + d + 1);
                    std::vector<Rational> bv(kernel[0].begin() + d + 1, kernel[0].end());
                    Polynomial a(std::move(av)), b(std::move(bv));
                    if (!b.isZero()) {
                        RationalFunction xt(a, b);
                        if (!known(xt)) {
                            // held-out validation on every sampled fiber
                            bool ok = true;
                            for (const SampleFiber& f : fibers) {
                                auto v = xt.eval(f.t);
                                if (!v) {
                                    ok = false;
                                    break;
                                }
                                const auto& xs = *f.xs(n);
                                if (std::find(xs.begin(), xs.end(), *v) == xs.end()) {
                                    ok = false;
                                    break;
                                }
                            }
                            if (ok) {
                                auto yt = recoverY(curve, xt);
                                if (yt) {
                                    PointQt p(xt, *yt);
                                    if (onCurve(curve, p) && hasExactOrder(curve, p, n)) {
                                        result.sections.push_back(TorsionSection{xt, *yt, n});
                                        ++foundAtN;
                                        if (foundAtN >= maxSectionXs(n))
                                            break;
                                    }
                                }
                            }
                        }
                    }
                }
                // advance odometer
                std::size_t pos = 0;
                while (pos < m) {
                    if (++choice[pos] < fibers[pos].xs(n)->size())
                        break;
                    choice[pos] = 0;
                    ++pos;
                }
                if (pos == m)
                    break;
            }
        }
        if (foundAtN == 0)
            result.warnings.push_back("order " + std::to_string(n) +
                                      ": every sampled fiber has exact-order points but no section "
                                      "within degree bound " +
                                      std::to_string(opts.degBound));
    }
    return result;
}

SweepReport injectivitySweep(const Fibration& fib, const TorsionSection& s, int count)
{
    SweepReport report;
    report.requested = count;
    if (count <= 0)
        return report;
    if (!verifySection(fib, s))
        throw ContractError("injectivitySweep: input does not verify as a torsion section");

    DiscLocusQ locus = discriminantLocusQ(fib);
    PointQt p = s.point();
    for (std::int64_t h = 1; report.checked < count; ++h) {
        if (h > 100000000)
            throw Error("injectivitySweep: ran out of base points");
        for (const P1Point& pt : p1HeightShell(h)) {
            if (report.checked >= count)
                break;
            if (pt.isInfinity())
                continue;
            Rational t0 = pt.toRational();
            if (locus.contains(t0) || hasCoefficientPole(fib, t0))
                continue;
            if (s.x.hasPoleAt(t0) || s.y.hasPoleAt(t0))
                continue;
            PointQ q = specializePoint(fib, p, t0);
            CurveQ fiber = specialize(fib, t0);
            auto ord = pointOrder(fiber, q);
            ++report.checked;
            if (!ord || *ord != s.order)
                report.violations.push_back(SweepViolation{t0, ord ? *ord : 0});
        }
    }
    return report;
}

} // namespace ellfib
