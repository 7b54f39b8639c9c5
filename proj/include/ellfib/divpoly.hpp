// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_DIVPOLY_HPP
#define ELLFIB_DIVPOLY_HPP

#include <utility>
#include <vector>

#include "ellfib/curve.hpp"
#include "ellfib/poly.hpp"

namespace ellfib {

// Division polynomials psi_n of a Weierstrass curve as polynomials in x.
//
// Convention for even n: psi_n = psi_2 * f_n where f_n is a polynomial in
// x alone and psi_2 = 2y + a1 x + a3 satisfies psi_2^2 = W(x) with
//   W = 4x^3 + b2 x^2 + 2 b4 x + b6.
// We store f_n (and f_n = psi_n itself for odd n); every W-power arising
// in the recurrences is substituted explicitly.  The x-coordinates of the
// nonzero n-torsion points are the roots of f_n together with, for even
// n, the roots of W.
template <class F>
class DivisionPolynomials {
public:
    explicit DivisionPolynomials(const WeierstrassCurve<F>& c) : curve_(c)
    {
        const F b2 = c.b2(), b4 = c.b4(), b6 = c.b6(), b8 = c.b8();
        W_ = Poly<F>(std::vector<F>{b6, F(2) * b4, b2, F(4)});
        f_.resize(5);
        f_[0] = Poly<F>();
        f_[1] = Poly<F>(F(1));
        f_[2] = Poly<F>(F(1));
        f_[3] = Poly<F>(std::vector<F>{b8, F(3) * b6, F(3) * b4, b2, F(3)});
        f_[4] = Poly<F>(std::vector<F>{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, F(10) * b8, F(10) * b6,
                                       F(5) * b4, b2, F(2)});
    }

    const WeierstrassCurve<F>& curve() const { return curve_; }

    // W(x) = psi_2^2
    const Poly<F>& twoTorsionCubic() const { return W_; }

    // f_n as described above; n >= 0.
    const Poly<F>& f(std::size_t n)
    {
        while (f_.size() <= n)
            grow();
        return f_[n];
    }

    // psi_n^2 as a polynomial in x.
    Poly<F> psiSquared(std::size_t n)
    {
        Poly<F> fn = f(n);
        Poly<F> s = fn * fn;
        return (n % 2 == 0) ? s * W_ : s;
    }

    // x(nP) = x - num/den evaluated at x = x(P):
    //   num = psi_{n-1} psi_{n+1},  den = psi_n^2,
    // both reduced to polynomials in x via the W substitution.
    std::pair<Poly<F>, Poly<F>> xMultiple(std::size_t n)
    {
        if (n == 0)
            throw ContractError("xMultiple: n must be >= 1");
        Poly<F> num = f(n - 1) * f(n + 1);
        Poly<F> den = f(n) * f(n);
        if (n % 2 == 0)
            den = den * W_;
        else
            num = num * W_;
        return {num, den};
    }

private:
    void grow()
    {
        std::size_t n = f_.size();
        std::size_t m = n / 2;
        Poly<F> next;
        if (n % 2 == 1) {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
            Poly<F> A = f_[m + 2] * f_[m] * f_[m] * f_[m];
            Poly<F> B = f_[m - 1] * f_[m + 1] * f_[m + 1] * f_[m + 1];
            Poly<F> W2 = W_ * W_;
            next = (m % 2 == 0) ? W2 * A - B : A - W2 * B;
        } else {
            // psi_2 psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2);
            // the psi_2 factors cancel identically for either parity of m
            Poly<F> A = f_[m + 2] * f_[m - 1] * f_[m - 1];
            Poly<F> B = f_[m - 2] * f_[m + 1] * f_[m + 1];
            next = f_[m] * (A - B);
        }
        f_.push_back(std::move(next));
    }

    WeierstrassCurve<F> curve_;
    Poly<F> W_;
    std::vector<Poly<F>> f_;
};

// The n-th division polynomial in the convention above: psi_n for odd n,
// psi_n / psi_2 for even n.
template <class F>
Poly<F> divisionPolynomial(const WeierstrassCurve<F>& c, std::size_t n)
{
    if (n < 1)
        throw ContractError("divisionPolynomial: n must be >= 1");
    DivisionPolynomials<F> dp(c);
    return dp.f(n);
}

} // namespace ellfib

#endif
