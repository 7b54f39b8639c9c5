// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef ELLFIB_FACTOR_HPP
#define ELLFIB_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ellfib {

using Int = mpz_class;

// Prime factorization n = p1^e1 * ... * pk^ek, primes ascending.
// Trial division for the small part, Pollard-Brent rho above that.
// Requires n >= 1.
std::vector<std::pair<Int, unsigned>> factorInt(const Int& n);

// All positive divisors of |n| in ascending order.  Throws
// WorkBudgetError if there would be more than `cap`.
std::vector<Int> divisorsOf(const Int& n, std::size_t cap = 1u << 20);

// Divisors d of |n| such that d is a perfect square, ascending.
std::vector<Int> squareDivisorsOf(const Int& n, std::size_t cap = 1u << 20);

bool isPrime(const Int& n);

} // namespace ellfib

#endif
