// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_RATIONAL_HPP
#define ELLFIB_RATIONAL_HPP

#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

#include "ellfib/errors.hpp"
#include "ellfib/factor.hpp"

namespace ellfib {

// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1,
// zero is 0/1.  Equality is structural.  Immutable in spirit; arithmetic
// returns fresh values.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den)
    {
        if (den == 0)
            throw ContractError("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    static Rational fromMpq(mpq_class q)
    {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    // Parses "p", "p/q", optional leading '-'.
    static Rational parse(const std::string& text);

    Int num() const { return Int(v_.get_num()); }
    Int den() const { return Int(v_.get_den()); }
    const mpq_class& mpq() const { return v_; }

    bool isZero() const { return v_ == 0; }
    bool isOne() const { return v_ == 1; }
    bool isInteger() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return fromMpq(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return fromMpq(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return fromMpq(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return fromMpq(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const
    {
        if (o.isZero())
            throw ContractError("Rational: division by zero");
        return fromMpq(mpq_class(v_ / o.v_));
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    Rational inverse() const
    {
        if (isZero())
            throw ContractError("Rational: inverse of zero");
        return fromMpq(mpq_class(1 / v_));
    }

    Rational pow(unsigned e) const
    {
        mpq_class r;
        mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
        mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
        return fromMpq(r); // canonical since the base is
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // Multiplicative height max(|num|, den).
    Int height() const
    {
        Int n = ::abs(Int(v_.get_num()));
        Int d(v_.get_den());
        return n > d ? n : d;
    }

    // Exact square root if this is a square in Q.
    std::optional<Rational> sqrt() const
    {
        if (sign() < 0)
            return std::nullopt;
        if (!mpz_perfect_square_p(v_.get_num_mpz_t()) || !mpz_perfect_square_p(v_.get_den_mpz_t()))
            return std::nullopt;
        mpq_class r;
        mpz_sqrt(r.get_num_mpz_t(), v_.get_num_mpz_t());
        mpz_sqrt(r.get_den_mpz_t(), v_.get_den_mpz_t());
        return fromMpq(r);
    }

    double toDouble() const { return v_.get_d(); }

    std::string str() const
    {
        if (v_.get_den() == 1)
            return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

} // namespace ellfib

#endif
