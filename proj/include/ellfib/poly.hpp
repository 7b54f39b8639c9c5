// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_POLY_HPP
#define ELLFIB_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ellfib/errors.hpp"
#include "ellfib/rational.hpp"

namespace ellfib {

// Dense univariate polynomial over an exact field K (K is Rational or
// RationalFunction here).  Coefficients are stored constant term first
// and normalized: the zero polynomial is the empty sequence, otherwise
// the leading coefficient is nonzero.  degree() is -1 for zero.
template <class K>
class Poly {
public:
    Poly() = default;
    Poly(const K& c)
    {
        if (!c.isZero())
            c_.push_back(c);
    }
    Poly(long c) : Poly(K(c)) {}
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly variable()
    {
        return Poly(std::vector<K>{K(0), K(1)});
    }
    // c * x^k
    static Poly monomial(const K& c, unsigned k)
    {
        if (c.isZero())
            return Poly();
        std::vector<K> v(k + 1, K(0));
        v[k] = c;
        return Poly(std::move(v));
    }

    int degree() const { return int(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }

    const K& coeff(std::size_t i) const
    {
        static const K zero{};
        return i < c_.size() ? c_[i] : zero;
    }
    const std::vector<K>& coeffs() const { return c_; }
    const K& lead() const
    {
        if (c_.empty())
            throw ContractError("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const
    {
        Poly r(*this);
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const
    {
        std::vector<K> v(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            v[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            v[i] += o.c_[i];
        return Poly(std::move(v));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const
    {
        if (isZero() || o.isZero())
            return Poly();
        std::vector<K> v(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                v[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(v));
    }

    Poly operator*(const K& s) const
    {
        if (s.isZero())
            return Poly();
        Poly r(*this);
        for (auto& c : r.c_)
            c *= s;
        return r;
    }
    Poly operator/(const K& s) const { return *this * s.inverse(); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned e) const
    {
        Poly r{K(1)};
        Poly b(*this);
        while (e) {
            if (e & 1)
                r *= b;
            b = (e >>= 1) ? b * b : b;
        }
        return r;
    }

    K eval(const K& x) const
    {
        K acc(0);
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + c_[i];
        return acc;
    }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return Poly();
        std::vector<K> v(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i)
            v[i - 1] = c_[i] * K(long(i));
        return Poly(std::move(v));
    }

    Poly monic() const
    {
        if (isZero())
            return *this;
        return *this / lead();
    }

    // Quotient and remainder; K must be a field, divisor nonzero.
    std::pair<Poly, Poly> divrem(const Poly& d) const
    {
        if (d.isZero())
            throw ContractError("Poly: division by zero polynomial");
        Poly q;
        std::vector<K> r = c_;
        K dinv = d.lead().inverse();
        std::vector<K> qv;
        if (int(r.size()) >= int(d.c_.size()))
            qv.assign(r.size() - d.c_.size() + 1, K(0));
        while (int(r.size()) >= int(d.c_.size()) && !r.empty()) {
            K f = r.back() * dinv;
            std::size_t shift = r.size() - d.c_.size();
            qv[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i)
                r[shift + i] -= f * d.c_[i];
            while (!r.empty() && r.back().isZero())
                r.pop_back();
        }
        return {Poly(std::move(qv)), Poly(std::move(r))};
    }

    std::string str(const std::string& var) const
    {
        if (isZero())
            return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            const K& c = c_[i];
            if (c.isZero())
                continue;
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            if (neg)
                cs = cs.substr(1);
            bool needCoeff = (i == 0) || cs != "1";
            if (needCoeff) {
                bool wrap = cs.find('/') != std::string::npos && i > 0;
                out += wrap ? "(" + cs + ")" : cs;
                if (i > 0)
                    out += "*";
            }
            if (i > 0) {
                out += var;
                if (i > 1)
                    out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void normalize()
    {
        while (!c_.empty() && c_.back().isZero())
            c_.pop_back();
    }

    std::vector<K> c_;
};

// The coefficient ring Q[t] used throughout: polynomials in t over Q.
using Polynomial = Poly<Rational>;

// Monic greatest common divisor; polyGcd(0, 0) = 0.  Internally uses a
// primitive pseudo-remainder sequence over Z to keep coefficients tame.
Polynomial polyGcd(const Polynomial& a, const Polynomial& b);

// Exact division; throws ContractError if the remainder is nonzero.
Polynomial divideExact(const Polynomial& a, const Polynomial& b);

// Yun squarefree decomposition: p = lead * prod A_i^i with the A_i monic,
// squarefree and pairwise coprime.  Returns the list of (A_i, i) with
// nontrivial A_i; requires p != 0.
std::vector<std::pair<Polynomial, int>> squarefreeDecomposition(const Polynomial& p);

// Primitive integer-coefficient image of a nonzero rational polynomial:
// multiplies by the lcm of denominators and divides by the content.  The
// sign of the leading coefficient is preserved.
std::vector<Int> integerize(const Polynomial& p);

// All rational roots of p, each once, found by the rational-root theorem
// on the integerized polynomial: candidates u/v with u | constant term
// and v | leading coefficient.  Throws ContractError on the zero
// polynomial.  `budget` caps the candidate count (WorkBudgetError).
std::vector<Rational> rationalRoots(const Polynomial& p, std::size_t budget = 1u << 22);

} // namespace ellfib

#endif
