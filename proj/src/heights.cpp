// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/heights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ellfib {

P1Point::P1Point(std::int64_t p_, std::int64_t q_) : p(p_), q(q_)
{
    if (p == 0 && q == 0)
        throw ContractError("P1Point: (0, 0) is not a point");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (q == 0)
        p = 1;
}

std::vector<P1Point> p1HeightShell(std::int64_t h)
{
    std::vector<P1Point> shell;
    if (h <= 0)
        return shell;
    if (h == 1) {
        shell.push_back(P1Point(-1, 1));
        shell.push_back(P1Point(0, 1));
        shell.push_back(P1Point(1, 0));
        shell.push_back(P1Point(1, 1));
        return shell;
    }
    // (p, q) lexicographic: p = -h first, then q = h with p ascending,
    // then p = h; coprimality with h filters each block
    for (std::int64_t k = 1; k < h; ++k)
        if (std::gcd(h, k) == 1)
            shell.push_back(P1Point(-h, k));
    for (std::int64_t k = h - 1; k >= 1; --k)
        if (std::gcd(h, k) == 1)
            shell.push_back(P1Point(-k, h));
    for (std::int64_t k = 1; k < h; ++k)
        if (std::gcd(h, k) == 1)
            shell.push_back(P1Point(k, h));
    for (std::int64_t k = 1; k < h; ++k)
        if (std::gcd(h, k) == 1)
            shell.push_back(P1Point(h, k));
    return shell;
}

P1Enumerator::P1Enumerator(double x)
{
    if (!(x > 0))
        throw ContractError("P1Enumerator: bound must be positive");
    // strict inequality H < x
    double lim = std::ceil(x) - 1;
    if (lim > 4e18)
        throw ContractError("P1Enumerator: bound too large");
    limit_ = std::int64_t(std::max(0.0, lim));
    if (double(limit_) >= x)
        --limit_; // x integral: heights up to x-1
}

void P1Enumerator::refill()
{
    shell_.clear();
    idx_ = 0;
    while (h_ < limit_) {
        ++h_;
        shell_ = p1HeightShell(h_);
        if (!shell_.empty())
            return;
    }
}

std::optional<P1Point> P1Enumerator::next()
{
    if (idx_ >= shell_.size()) {
        refill();
        if (shell_.empty())
            return std::nullopt;
    }
    return shell_[idx_++];
}

std::vector<P1Point> enumerateP1(double x)
{
    std::vector<P1Point> out;
    P1Enumerator en(x);
    while (auto p = en.next())
        out.push_back(*p);
    return out;
}

std::uint64_t countP1(double x)
{
    std::uint64_t n = 0;
    P1Enumerator en(x);
    while (en.next())
        ++n;
    return n;
}

namespace {

FitResult logLogFit(std::vector<std::pair<double, double>> pts)
{
    if (pts.size() < 3)
        throw ContractError("fit: need at least 3 samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double n = double(pts.size());
    double denom = n * sxx - sx * sx;
    if (denom == 0)
        throw ContractError("fit: degenerate abscissae");
    FitResult r;
    r.exponent = (n * sxy - sx * sy) / denom;
    double intercept = (sy - r.exponent * sx) / n;
    r.constant = std::exp(intercept);
    double ss = 0;
    for (auto& [x, y] : pts) {
        double e = y - (intercept + r.exponent * x);
        ss += e * e;
    }
    r.residual = std::sqrt(ss / n);
    return r;
}

} // namespace

FitResult fitSchanuel(const std::vector<std::pair<double, double>>& counts)
{
    std::vector<std::pair<double, double>> pts;
    for (auto& [x, nx] : counts) {
        if (!(x > 0) || !(nx > 0))
            throw ContractError("fitSchanuel: samples must be positive");
        pts.emplace_back(std::log(x), std::log(nx));
    }
    return logLogFit(std::move(pts));
}

FitResult fitNeron(const std::vector<std::pair<double, double>>& counts)
{
    std::vector<std::pair<double, double>> pts;
    for (auto& [x, nx] : counts) {
        if (!(x > 1) || !(nx > 0))
            throw ContractError("fitNeron: samples must have x > 1, N > 0");
        pts.emplace_back(std::log(std::log(x)), std::log(nx));
    }
    return logLogFit(std::move(pts));
}

namespace {

// log max(|num|, den) of a rational, via the top limb and bit length
double logHeight(const Rational& r)
{
    Int h = r.height();
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, h.get_mpz_t());
    return std::log(d) + double(exp2) * std::log(2.0);
}

} // namespace

CanonicalHeight canonicalHeight(const CurveQ& curve, const PointQ& p)
{
    if (!curve.isSmooth())
        throw SingularCurveError("canonicalHeight on a singular curve");
    if (!onCurve(curve, p))
        throw ContractError("canonicalHeight: point not on curve");

    CanonicalHeight out;
    if (p.isInfinity())
        return out;

    PointQ q = p;
    double prev = logHeight(q.x); // h_0
    double value = prev;          // 4^-k h_k
    for (int k = 1; k <= kCanonicalHeightMaxDoublings; ++k) {
        q = add(curve, q, q);
        if (q.isInfinity()) {
            // 2^k P = infinity: torsion, exact zero
            return {0.0, 0.0, k};
        }
        double hk = logHeight(q.x);
        double scale = std::pow(4.0, -k);
        double increment = scale * std::fabs(hk - 4.0 * prev) * (4.0 / 3.0);
        value = scale * hk;
        out.iterations = k;
        out.errorBound = increment;
        prev = hk;
        if (increment < kCanonicalHeightTolerance)
            break;
    }
    out.value = value;
    return out;
}

void MWBasis::validate() const
{
    if (!curve.isSmooth())
        throw ContractError("MWBasis: singular curve");
    for (const PointQ& g : generators) {
        if (!onCurve(curve, g))
            throw ContractError("MWBasis: generator not on curve");
        if (pointOrder(curve, g))
            throw ContractError("MWBasis: generator has finite order");
    }
    for (const PointQ& t : torsion) {
        if (!onCurve(curve, t))
            throw ContractError("MWBasis: torsion point not on curve");
        auto ord = pointOrder(curve, t);
        if (!ord || *ord == 1)
            throw ContractError("MWBasis: listed torsion point is not nontrivial torsion");
    }
}

namespace {

// Gram matrix of the canonical-height pairing on the generators.
std::vector<std::vector<double>> heightPairing(const MWBasis& b)
{
    std::size_t r = b.generators.size();
    std::vector<double> diag(r);
    for (std::size_t i = 0; i < r; ++i)
        diag[i] = canonicalHeight(b.curve, b.generators[i]).value;
    std::vector<std::vector<double>> g(r, std::vector<double>(r, 0.0));
    for (std::size_t i = 0; i < r; ++i) {
        g[i][i] = diag[i];
        for (std::size_t j = i + 1; j < r; ++j) {
            PointQ s = add(b.curve, b.generators[i], b.generators[j]);
            double hs = canonicalHeight(b.curve, s).value;
            g[i][j] = g[j][i] = (hs - diag[i] - diag[j]) / 2.0;
        }
    }
    return g;
}

// axis-aligned bounding box of the ellipsoid nT G n < B:
// |n_i| <= sqrt(B * (G^-1)_ii)
std::vector<long> ellipsoidBox(std::vector<std::vector<double>> g, double bound)
{
    std::size_t r = g.size();
    // invert by Gauss-Jordan
    std::vector<std::vector<double>> inv(r, std::vector<double>(r, 0.0));
    for (std::size_t i = 0; i < r; ++i)
        inv[i][i] = 1.0;
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < r; ++i)
            if (std::fabs(g[i][col]) > std::fabs(g[piv][col]))
                piv = i;
        if (std::fabs(g[piv][col]) < 1e-12)
            throw ContractError("enumerateMW: height pairing is numerically degenerate "
                                "(generators dependent or torsion listed as generator)");
        std::swap(g[piv], g[col]);
        std::swap(inv[piv], inv[col]);
        double d = g[col][col];
        for (std::size_t j = 0; j < r; ++j) {
            g[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (i == col)
                continue;
            double f = g[i][col];
            for (std::size_t j = 0; j < r; ++j) {
                g[i][j] -= f * g[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    std::vector<long> box(r);
    for (std::size_t i = 0; i < r; ++i)
        box[i] = long(std::sqrt(std::max(0.0, bound * inv[i][i])) * (1 + 1e-9) + 1e-9);
    return box;
}

void enumerateBox(const MWBasis& basis, const std::vector<std::vector<double>>& gram,
                  const std::vector<long>& box, double bound, std::vector<long>& n, std::size_t axis,
                  std::vector<PointQ>& out)
{
    std::size_t r = basis.generators.size();
    if (axis == r) {
        double qv = 0;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                qv += gram[i][j] * double(n[i]) * double(n[j]);
        if (qv >= bound)
            return;
        PointQ base = PointQ::infinity();
        for (std::size_t i = 0; i < r; ++i)
            if (n[i] != 0)
                base = add(basis.curve, base, scalarMul(basis.curve, n[i], basis.generators[i]));
        out.push_back(base);
        for (const PointQ& t : basis.torsion)
            out.push_back(add(basis.curve, base, t));
        return;
    }
    for (long v = -box[axis]; v <= box[axis]; ++v) {
        n[axis] = v;
        enumerateBox(basis, gram, box, bound, n, axis + 1, out);
    }
    n[axis] = 0;
}

} // namespace

std::vector<PointQ> enumerateMW(const MWBasis& basis, double x)
{
    if (!(x > 1))
        throw ContractError("enumerateMW: bound must exceed 1");
    double bound = std::log(x) / 2.0; // hhat < log(x) / 2

    std::vector<PointQ> out;
    if (basis.generators.empty()) {
        out.push_back(PointQ::infinity());
        for (const PointQ& t : basis.torsion)
            out.push_back(t);
        return out;
    }
    auto gram = heightPairing(basis);
    auto box = ellipsoidBox(gram, bound);
    std::vector<long> n(basis.generators.size(), 0);
    enumerateBox(basis, gram, box, bound, n, 0, out);
    return out;
}

std::uint64_t countMW(const MWBasis& basis, double x)
{
    return enumerateMW(basis, x).size();
}

} // namespace ellfib
