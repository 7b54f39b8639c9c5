// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

namespace ellfib {

namespace {

// ---------------------------------------------------------------------
// Torsion-order filter tables.
//
// For each small odd prime l of generically good reduction we tabulate,
// for every residue tau, whether the fiber at t = tau mod l is usable
// (no denominator vanishes, discriminant nonzero) and the group order
// #E(F_l).  Rational torsion of the fiber at t0 = p/q injects into the
// reduction whenever q and all denominators are invertible mod l, so the
// torsion order divides gcd over usable primes of the table entries.
// gcd = 1 certifies trivial torsion without any exact work.
// ---------------------------------------------------------------------

struct PrimeTable {
    std::uint32_t l = 0;
    std::vector<std::uint16_t> order;  // 0 = unusable at this residue
    std::vector<std::uint32_t> inv;    // modular inverses, inv[0] unused
};

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    b %= m;
    while (e) {
        if (e & 1)
            r = (__uint128_t(r) * b) % m;
        b = (__uint128_t(b) * b) % m;
        e >>= 1;
    }
    return r;
}

// coefficients of a rational polynomial mod l; nullopt if a coefficient
// denominator vanishes
std::optional<std::vector<std::uint32_t>> polyMod(const Polynomial& p, std::uint32_t l)
{
    std::vector<std::uint32_t> out(std::size_t(p.degree() + 1), 0);
    for (int i = 0; i <= p.degree(); ++i) {
        const Rational& c = p.coeff(std::size_t(i));
        std::uint64_t den = mpz_fdiv_ui(c.den().get_mpz_t(), l);
        if (den == 0)
            return std::nullopt;
        std::uint64_t num = mpz_fdiv_ui(c.num().get_mpz_t(), l);
        out[std::size_t(i)] = std::uint32_t((__uint128_t(num) * powmod(den, l - 2, l)) % l);
    }
    return out;
}

std::optional<PrimeTable> buildPrimeTable(const Fibration& fib, std::uint32_t l)
{
    const CurveQt& c = fib.curve();
    const RationalFunction* coeffs[5] = {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6};
    std::vector<std::uint32_t> nums[5], dens[5];
    for (int i = 0; i < 5; ++i) {
        auto n = polyMod(coeffs[i]->num(), l);
        auto d = polyMod(coeffs[i]->den(), l);
        if (!n || !d)
            return std::nullopt;
        nums[i] = std::move(*n);
        dens[i] = std::move(*d);
    }

    auto evalMod = [l](const std::vector<std::uint32_t>& v, std::uint32_t x) -> std::uint32_t {
        std::uint64_t acc = 0;
        for (std::size_t i = v.size(); i-- > 0;)
            acc = (__uint128_t(acc) * x + v[i]) % l;
        return std::uint32_t(acc);
    };

    std::vector<int> chi(l, -1);
    chi[0] = 0;
    for (std::uint64_t v = 1; v <= (l - 1) / 2; ++v)
        chi[std::size_t((v * v) % l)] = 1;

    PrimeTable tab;
    tab.l = l;
    tab.order.assign(l, 0);
    tab.inv.assign(l, 0);
    for (std::uint32_t v = 1; v < l; ++v)
        tab.inv[v] = std::uint32_t(powmod(v, l - 2, l));

    auto mul = [l](std::uint64_t x, std::uint64_t y) { return std::uint64_t((x * y) % l); };
    auto addm = [l](std::uint64_t x, std::uint64_t y) { return (x + y) % l; };
    auto subm = [l](std::uint64_t x, std::uint64_t y) { return (x + l - y % l) % l; };

    std::size_t usableCount = 0;
    for (std::uint32_t tau = 0; tau < l; ++tau) {
        std::uint64_t a[5];
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i) {
            std::uint32_t d = evalMod(dens[i], tau);
            if (d == 0) {
                ok = false;
                break;
            }
            a[i] = mul(evalMod(nums[i], tau), tab.inv[d]);
        }
        if (!ok)
            continue;
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
            continue;
        long sum = 0;
        for (std::uint64_t x = 0; x < l; ++x) {
            std::uint64_t rhs =
                addm(mul(x, mul(x, x)), addm(mul(a[1], mul(x, x)), addm(mul(a[3], x), a[4])));
            std::uint64_t t = addm(mul(a[0], x), a[2]);
            std::uint64_t d = addm(mul(t, t), mul(4, rhs));
            sum += chi[std::size_t(d)];
        }
        tab.order[tau] = std::uint16_t(long(l) + 1 + sum);
        ++usableCount;
    }
    if (usableCount == 0)
        return std::nullopt;
    return tab;
}

std::vector<PrimeTable> buildFilter(const Fibration& fib)
{
    static const std::uint32_t primes[] = {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                           47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101};
    std::vector<PrimeTable> tables;
    for (std::uint32_t l : primes)
        if (auto t = buildPrimeTable(fib, l))
            tables.push_back(std::move(*t));
    return tables;
}

std::uint64_t filterOrderBound(const std::vector<PrimeTable>& tables, std::int64_t p, std::int64_t q)
{
    std::uint64_t g = 0;
    for (const PrimeTable& tab : tables) {
        std::uint32_t l = tab.l;
        std::uint32_t qm = std::uint32_t(q % l);
        if (qm == 0)
            continue;
        std::int64_t pm = p % std::int64_t(l);
        if (pm < 0)
            pm += l;
        std::uint32_t tau = std::uint32_t((std::uint64_t(pm) * tab.inv[qm]) % l);
        std::uint16_t ord = tab.order[tau];
        if (ord == 0)
            continue;
        g = std::gcd(g, std::uint64_t(ord));
        if (g == 1)
            return 1;
    }
    return g;
}

// small-value membership keys for the discriminant locus and pole sets
struct SmallSet {
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;

    void add(const Rational& r)
    {
        if (mpz_fits_slong_p(r.num().get_mpz_t()) && mpz_fits_slong_p(r.den().get_mpz_t()))
            entries.emplace_back(r.num().get_si(), r.den().get_si());
        // values beyond 64 bits can never match an enumerated base point
    }
    void sort()
    {
        std::sort(entries.begin(), entries.end());
        entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    }
    bool contains(std::int64_t p, std::int64_t q) const
    {
        return std::binary_search(entries.begin(), entries.end(), std::make_pair(p, q));
    }
};

struct ShellResult {
    std::uint64_t n = 0, m = 0;
    std::map<TorsionGroupLabel, std::uint64_t> histogram;
    std::vector<std::pair<P1Point, TorsionGroupLabel>> torsion;
    std::vector<CensusRecord> records;
};

class P1CensusEngine {
public:
    P1CensusEngine(const Fibration& fib, double x, const CensusOptions& opts)
        : fib_(fib), opts_(opts), x_(x)
    {
        DiscLocusQ locus = discriminantLocusQ(fib);
        for (const Rational& r : locus.points)
            locusSet_.add(r);
        const CurveQt& c = fib.curve();
        for (const RationalFunction* a : {&c.a1, &c.a2, &c.a3, &c.a4, &c.a6})
            if (a->den().degree() > 0)
                for (const Rational& r : rationalRoots(a->den()))
                    poleSet_.add(r);
        locusSet_.sort();
        poleSet_.sort();
        tables_ = buildFilter(fib);
        double lim = std::ceil(x) - 1;
        if (lim > 1e15)
            throw ContractError("census: height bound too large");
        hLimit_ = std::int64_t(std::max(0.0, lim));
        if (double(hLimit_) >= x)
            --hLimit_;
    }

    CensusStats run()
    {
        const std::size_t shells = std::size_t(std::max<std::int64_t>(hLimit_, 0));
        std::vector<ShellResult> results{shells, ShellResult{}};
        std::atomic<std::int64_t> next{1};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex errorMutex;

        int jobs = std::max(1, opts_.jobs);
        auto worker = [&] {
            while (!failed.load(std::memory_order_relaxed)) {
                std::int64_t h = next.fetch_add(1);
                if (h > std::int64_t(shells))
                    return;
                try {
                    results[std::size_t(h - 1)] = processShell(h);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(errorMutex);
                    if (!error)
                        error = std::current_exception();
                    failed.store(true);
                    return;
                }
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int i = 0; i < jobs; ++i)
                pool.emplace_back(worker);
            for (auto& t : pool)
                t.join();
        }
        if (error)
            std::rethrow_exception(error);

        CensusStats stats;
        stats.summary.x = x_;
        for (ShellResult& r : results) {
            stats.summary.N += r.n;
            stats.summary.M += r.m;
            for (auto& [label, count] : r.histogram)
                stats.summary.histogram[label] += count;
            for (auto& [pt, label] : r.torsion)
                stats.torsionT0.push_back(pt.toRational());
            if (opts_.keepRecords)
                for (CensusRecord& rec : r.records)
                    stats.records.push_back(std::move(rec));
        }
        if (stats.summary.M >= 1 && stats.summary.N >= 2)
            stats.summary.lambdaHat =
                std::log(double(stats.summary.M)) / std::log(double(stats.summary.N));
        return stats;
    }

private:
    ShellResult processShell(std::int64_t h) const
    {
        ShellResult out;
        for (const P1Point& pt : p1HeightShell(h)) {
            if (pt.isInfinity())
                continue; // one affine chart; documented exclusion
            out.n += 1;
            CensusRecord rec;
            rec.base = pt;
            rec.height = double(pt.height());
            if (poleSet_.contains(pt.p, pt.q)) {
                rec.status = FiberStatus::Pole;
            } else if (locusSet_.contains(pt.p, pt.q)) {
                rec.status = FiberStatus::Singular;
            } else {
                rec.status = FiberStatus::Smooth;
                std::uint64_t bound = filterOrderBound(tables_, pt.p, pt.q);
                TorsionGroupLabel label = TorsionGroupLabel::trivial();
                if (bound != 1) {
                    CurveQ fiber = specialize(fib_, pt.toRational());
                    TorsionOptions topts;
                    topts.orderBoundHint = bound;
                    topts.rootBudget = opts_.rootBudget;
                    label = torsionSubgroupQ(fiber, topts).label;
                }
                rec.torsion = label;
                out.histogram[label] += 1;
                if (!label.isTrivial()) {
                    out.m += 1;
                    out.torsion.emplace_back(pt, label);
                }
            }
            if (opts_.keepRecords)
                out.records.push_back(std::move(rec));
        }
        return out;
    }

    const Fibration& fib_;
    CensusOptions opts_;
    double x_;
    std::int64_t hLimit_ = 0;
    SmallSet locusSet_, poleSet_;
    std::vector<PrimeTable> tables_;
};

} // namespace

CensusStats runCensusStats(const Fibration& fib, double x, const CensusOptions& opts)
{
    if (!(x > 0))
        throw ContractError("runCensus: bound must be positive");
    P1CensusEngine engine(fib, x, opts);
    return engine.run();
}

CensusStats runCensusStats(const Fibration& fib, const MWBasis& base, double x, const CensusOptions& opts)
{
    if (!(x > 1))
        throw ContractError("runCensus: bound must exceed 1 on an elliptic base");
    base.validate();

    // order points by height, then (x, y)
    std::vector<std::pair<double, PointQ>> pts;
    for (const PointQ& p : enumerateMW(base, x)) {
        double h = std::exp(2.0 * canonicalHeight(base.curve, p).value);
        pts.emplace_back(h, p);
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        const PointQ &p = a.second, &q = b.second;
        if (p.isInfinity() || q.isInfinity())
            return p.isInfinity() && !q.isInfinity();
        if (p.x != q.x)
            return p.x < q.x;
        return p.y < q.y;
    });

    RationalFunction disc = discriminantFunction(fib);
    CensusStats stats;
    stats.summary.x = x;
    for (auto& [h, p] : pts) {
        if (p.isInfinity())
            continue; // no affine base parameter; documented exclusion
        stats.summary.N += 1;
        CensusRecord rec;
        rec.base = p;
        rec.height = h;
        Rational t0 = p.x;
        if (hasCoefficientPole(fib, t0)) {
            rec.status = FiberStatus::Pole;
        } else {
            auto d = disc.eval(t0);
            if (!d || d->isZero()) {
                rec.status = FiberStatus::Singular;
            } else {
                rec.status = FiberStatus::Smooth;
                TorsionOptions topts;
                topts.rootBudget = opts.rootBudget;
                TorsionGroupLabel label = torsionSubgroupQ(specialize(fib, t0), topts).label;
                rec.torsion = label;
                stats.summary.histogram[label] += 1;
                if (!label.isTrivial()) {
                    stats.summary.M += 1;
                    stats.torsionBase.push_back(p);
                }
            }
        }
        if (opts.keepRecords)
            stats.records.push_back(std::move(rec));
    }
    if (stats.summary.M >= 1 && stats.summary.N >= 2)
        stats.summary.lambdaHat = std::log(double(stats.summary.M)) / std::log(double(stats.summary.N));
    return stats;
}

std::vector<CensusRecord> runCensus(const Fibration& fib, double x, const CensusOptions& opts)
{
    CensusOptions o = opts;
    o.keepRecords = true;
    return runCensusStats(fib, x, o).records;
}

std::vector<CensusRecord> runCensus(const Fibration& fib, const MWBasis& base, double x,
                                    const CensusOptions& opts)
{
    CensusOptions o = opts;
    o.keepRecords = true;
    return runCensusStats(fib, base, x, o).records;
}

CensusSummary summarize(const std::vector<CensusRecord>& records, double x)
{
    CensusSummary s;
    s.x = x;
    for (const CensusRecord& r : records) {
        s.N += 1;
        if (r.status == FiberStatus::Smooth) {
            if (!r.torsion)
                throw ContractError("summarize: smooth record without torsion label");
            s.histogram[*r.torsion] += 1;
            if (!r.torsion->isTrivial())
                s.M += 1;
        }
    }
    if (s.M >= 1 && s.N >= 2)
        s.lambdaHat = std::log(double(s.M)) / std::log(double(s.N));
    return s;
}

Verdict thresholdReport(const CensusSummary& summary, double margin)
{
    if (!summary.lambdaHat)
        throw ContractError("thresholdReport: summary has no lambdaHat");
    double l = *summary.lambdaHat;
    if (std::fabs(l - 0.5) <= margin)
        return Verdict::Near;
    return l > 0.5 ? Verdict::Above : Verdict::Below;
}

} // namespace ellfib
