// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/expr.hpp"

#include <cctype>

namespace ellfib {

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Polynomial run()
    {
        Polynomial p = expr();
        skipSpace();
        if (pos_ != s_.size())
            fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("expression: " + why + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

    void skipSpace()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skipSpace();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek()
    {
        skipSpace();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Int integer()
    {
        skipSpace();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected integer");
        return Int(s_.substr(start, pos_ - start));
    }

    Polynomial expr()
    {
        Polynomial p = eat('-') ? -term() : term();
        while (true) {
            if (eat('+'))
                p += term();
            else if (eat('-'))
                p -= term();
            else
                return p;
        }
    }

    Polynomial term()
    {
        Polynomial p = factor();
        while (eat('*'))
            p *= factor();
        return p;
    }

    Polynomial factor()
    {
        if (eat('-'))
            return -factor();
        Polynomial base = atom();
        while (eat('^')) {
            skipSpace();
            if (peek() == '-')
                fail("exponent must be nonnegative");
            Int e = integer();
            if (e > 4096)
                fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Polynomial atom()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (c == 't') {
            ++pos_;
            return Polynomial::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = integer();
            if (eat('/')) {
                Int den = integer();
                if (den == 0)
                    fail("zero denominator in rational literal");
                return Polynomial(Rational(num, den));
            }
            return Polynomial(Rational(num));
        }
        fail("expected literal, 't' or '('");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parsePolynomial(const std::string& text)
{
    return Parser(text).run();
}

} // namespace ellfib
