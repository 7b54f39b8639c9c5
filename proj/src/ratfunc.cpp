// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/ratfunc.hpp"

namespace ellfib {

namespace {

// Square root of a monic polynomial, if it is a square: every squarefree
// factor must appear with even multiplicity.
std::optional<Polynomial> monicPolySqrt(const Polynomial& p)
{
    if (p.degree() == 0)
        return Polynomial(1l);
    if (p.degree() % 2 != 0)
        return std::nullopt;
    Polynomial root(1l);
    for (const auto& [a, e] : squarefreeDecomposition(p)) {
        if (e % 2 != 0)
            return std::nullopt;
        root *= a.pow(unsigned(e / 2));
    }
    return root;
}

} // namespace

std::optional<RationalFunction> squareRootInQt(const RationalFunction& f)
{
    if (f.isZero())
        return RationalFunction();

    // leading constant (den is monic, so this is lead(num))
    Rational lc = f.num().lead();
    auto s = lc.sqrt();
    if (!s)
        return std::nullopt;

    auto rn = monicPolySqrt(f.num().monic());
    if (!rn)
        return std::nullopt;
    auto rd = monicPolySqrt(f.den());
    if (!rd)
        return std::nullopt;

    RationalFunction g(*rn * *s, *rd);
    if (!(g * g == f))
        return std::nullopt;
    return g;
}

} // namespace ellfib
