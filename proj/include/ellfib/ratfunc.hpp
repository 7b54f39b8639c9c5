// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_RATFUNC_HPP
#define ELLFIB_RATFUNC_HPP

#include <optional>
#include <string>

#include "ellfib/poly.hpp"

namespace ellfib {

// Element of Q(t) in canonical form: gcd(num, den) = 1, den monic and
// nonzero; zero is 0/1.  Equality is structural.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial(1l)) {}
    RationalFunction(long c) : num_(Polynomial(c)), den_(Polynomial(1l)) {}
    RationalFunction(const Rational& c) : num_(Polynomial(c)), den_(Polynomial(1l)) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(Polynomial(1l)) {}
    RationalFunction(Polynomial num, Polynomial den)
    {
        if (den.isZero())
            throw ContractError("RationalFunction: zero denominator");
        Polynomial g = polyGcd(num, den);
        if (g.degree() > 0) {
            num = divideExact(num, g);
            den = divideExact(den, g);
        }
        if (num.isZero()) {
            num_ = Polynomial();
            den_ = Polynomial(1l);
            return;
        }
        Rational lc = den.lead();
        num_ = num / lc;
        den_ = den / lc;
    }

    static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return den_.isConstant() && num_ == Polynomial(1l); }
    bool isConstant() const { return num_.isConstant() && den_.isConstant(); }
    bool isPolynomial() const { return den_.isConstant(); }

    // Constant value; requires isConstant().
    Rational constant() const
    {
        if (!isConstant())
            throw ContractError("RationalFunction: not a constant");
        return num_.isZero() ? Rational() : num_.coeff(0);
    }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const { return fromCanonical(-num_, den_); }
    RationalFunction operator+(const RationalFunction& o) const
    {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const
    {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const
    {
        if (o.isZero())
            throw ContractError("RationalFunction: division by zero");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const
    {
        if (isZero())
            throw ContractError("RationalFunction: inverse of zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(unsigned e) const
    {
        RationalFunction r(1l);
        RationalFunction b(*this);
        while (e) {
            if (e & 1)
                r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    RationalFunction derivative() const
    {
        // (n/d)' = (n'd - nd') / d^2; the constructor recanonicalizes
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Evaluation at t0; nullopt at a pole.
    std::optional<Rational> eval(const Rational& t0) const
    {
        Rational d = den_.eval(t0);
        if (d.isZero())
            return std::nullopt;
        return num_.eval(t0) / d;
    }

    bool hasPoleAt(const Rational& t0) const { return den_.eval(t0).isZero(); }

    std::string str(const std::string& var = "t") const
    {
        std::string n = num_.str(var);
        if (den_.isConstant())
            return n;
        bool wrapNum = num_.degree() > 0 && num_.coeffs().size() > 1;
        std::string d = den_.str(var);
        bool wrapDen = den_.coeffs().size() > 1 || d.find('/') != std::string::npos;
        return (wrapNum ? "(" + n + ")" : n) + " / " + (wrapDen ? "(" + d + ")" : d);
    }

private:
    static RationalFunction fromCanonical(Polynomial num, Polynomial den)
    {
        RationalFunction r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    Polynomial num_, den_;
};

// Exact square root in Q(t) if one exists, via squarefree decomposition
// of numerator and denominator plus a rational square test on the leading
// constant.  The returned root has positive leading coefficient.
std::optional<RationalFunction> squareRootInQt(const RationalFunction& f);

} // namespace ellfib

#endif
