// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_EXPR_HPP
#define ELLFIB_EXPR_HPP

#include <string>

#include "ellfib/poly.hpp"

namespace ellfib {

// Parses a polynomial expression in the variable `t`:
//   integer and rational literals (3, -2/5), the variable t,
//   operators + - * ^ (nonnegative integer exponents), parentheses.
// Whitespace is insignificant.  '/' occurs only inside rational
// literals; there is no division operator.
Polynomial parsePolynomial(const std::string& text);

} // namespace ellfib

#endif
