// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/poly.hpp"

#include <algorithm>

#include "ellfib/factor.hpp"

namespace ellfib {

namespace {

using ZPoly = std::vector<Int>; // constant term first, no trailing zeros

void trim(ZPoly& v)
{
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

Int content(const ZPoly& v)
{
    Int g = 0;
    for (const Int& c : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g; // 0 for the zero polynomial
}

ZPoly primitivePart(ZPoly v)
{
    trim(v);
    Int g = content(v);
    if (g > 1)
        for (Int& c : v)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return v;
}

// Pseudo-remainder of a by b: rem(lead(b)^(deg a - deg b + 1) * a, b),
// computed entirely over Z.  Requires deg a >= deg b, b nonzero.
ZPoly pseudoRem(ZPoly a, const ZPoly& b)
{
    const Int& lb = b.back();
    int k = int(a.size()) - int(b.size()) + 1;
    Int scale = 1;
    for (int i = 0; i < k; ++i)
        scale *= lb;
    for (Int& c : a)
        c *= scale;
    while (a.size() >= b.size() && !a.empty()) {
        Int f = a.back() / lb; // exact by construction
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

ZPoly toZ(const Polynomial& p)
{
    if (p.isZero())
        return {};
    return integerize(p) /* already primitive */;
}

Polynomial toQ(const ZPoly& v)
{
    std::vector<Rational> c;
    c.reserve(v.size());
    for (const Int& x : v)
        c.emplace_back(x);
    return Polynomial(std::move(c));
}

} // namespace

std::vector<Int> integerize(const Polynomial& p)
{
    if (p.isZero())
        throw ContractError("integerize: zero polynomial");
    Int lcm = 1;
    for (const Rational& c : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    ZPoly v;
    v.reserve(p.coeffs().size());
    for (const Rational& c : p.coeffs())
        v.push_back(c.num() * (lcm / c.den()));
    return primitivePart(std::move(v));
}

Polynomial polyGcd(const Polynomial& a, const Polynomial& b)
{
    if (a.isZero() && b.isZero())
        return Polynomial();
    if (a.isZero())
        return b.monic();
    if (b.isZero())
        return a.monic();
    ZPoly u = toZ(a), v = toZ(b);
    if (u.size() < v.size())
        std::swap(u, v);
    while (!v.empty()) {
        ZPoly r = pseudoRem(u, v);
        u = std::move(v);
        v = primitivePart(std::move(r));
    }
    return toQ(u).monic();
}

Polynomial divideExact(const Polynomial& a, const Polynomial& b)
{
    auto [q, r] = a.divrem(b);
    if (!r.isZero())
        throw ContractError("divideExact: division is not exact");
    return q;
}

std::vector<std::pair<Polynomial, int>> squarefreeDecomposition(const Polynomial& p)
{
    if (p.isZero())
        throw ContractError("squarefreeDecomposition: zero polynomial");
    std::vector<std::pair<Polynomial, int>> out;
    Polynomial f = p.monic();
    if (f.degree() == 0)
        return out;
    // Yun's algorithm
    Polynomial fp = f.derivative();
    Polynomial g = polyGcd(f, fp);
    Polynomial w = divideExact(f, g);
    Polynomial y = divideExact(fp, g);
    Polynomial z = y - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        Polynomial ai = polyGcd(w, z);
        if (ai.degree() > 0)
            out.emplace_back(ai, i);
        w = divideExact(w, ai);
        y = divideExact(z, ai);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

std::vector<Rational> rationalRoots(const Polynomial& p, std::size_t budget)
{
    if (p.isZero())
        throw ContractError("rationalRoots: zero polynomial");
    std::vector<Rational> roots;
    if (p.degree() == 0)
        return roots;

    ZPoly c = integerize(p);
    // strip powers of x; x = 0 is a root iff the constant term vanishes
    std::size_t low = 0;
    while (c[low] == 0)
        ++low;
    if (low > 0) {
        roots.emplace_back(0l);
        c.erase(c.begin(), c.begin() + long(low));
    }
    if (c.size() <= 1) {
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    const Int c0 = c.front(), cd = c.back();
    std::vector<Int> us = divisorsOf(c0, budget);
    std::vector<Int> vs = divisorsOf(cd, budget);
    if (us.size() * vs.size() * 2 > budget)
        throw WorkBudgetError("rationalRoots: candidate budget exceeded");

    // p(1) and p(-1) for the classical (v - u) | p(1), (v + u) | p(-1) sieve
    Int f1 = 0, fm1 = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        f1 += c[i];
        fm1 += (i & 1) ? -c[i] : c[i];
    }

    const int d = int(c.size()) - 1;
    auto isRoot = [&](const Int& u, const Int& v) {
        // homogeneous Horner: sum c[i] u^i v^(d-i) == 0
        Int acc = c[std::size_t(d)];
        Int vp = 1;
        for (int i = d - 1; i >= 0; --i) {
            vp *= v;
            acc = acc * u + c[std::size_t(i)] * vp;
        }
        return acc == 0;
    };

    Int g, t;
    for (const Int& v : vs) {
        for (const Int& uabs : us) {
            mpz_gcd(g.get_mpz_t(), uabs.get_mpz_t(), v.get_mpz_t());
            if (g != 1)
                continue;
            for (int s = 0; s < 2; ++s) {
                Int u = s ? -uabs : uabs;
                t = v - u;
                if (f1 != 0 && (t == 0 || !mpz_divisible_p(f1.get_mpz_t(), t.get_mpz_t())))
                    continue;
                t = v + u;
                if (fm1 != 0 && (t == 0 || !mpz_divisible_p(fm1.get_mpz_t(), t.get_mpz_t())))
                    continue;
                if (isRoot(u, v))
                    roots.emplace_back(u, v);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace ellfib
