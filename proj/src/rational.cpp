// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/rational.hpp"

#include <cctype>

namespace ellfib {

Rational Rational::parse(const std::string& text)
{
    std::size_t i = 0, n = text.size();
    auto skip = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip();
    bool neg = false;
    if (i < n && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    skip();
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
    if (i == start)
        throw ParseError("rational literal: expected digits in \"" + text + "\"");
    Int num(text.substr(start, i - start));
    Int den = 1;
    skip();
    if (i < n && text[i] == '/') {
        ++i;
        skip();
        start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (i == start)
            throw ParseError("rational literal: expected denominator in \"" + text + "\"");
        den = Int(text.substr(start, i - start));
        if (den == 0)
            throw ParseError("rational literal: zero denominator in \"" + text + "\"");
    }
    skip();
    if (i != n)
        throw ParseError("rational literal: trailing characters in \"" + text + "\"");
    if (neg)
        num = -num;
    return Rational(num, den);
}

} // namespace ellfib
