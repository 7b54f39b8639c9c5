// (C) 2026 the ellfib authors
//
// This file is part of ellfib.
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#include "ellfib/factor.hpp"

#include <algorithm>
#include <cstdlib>

#include "ellfib/errors.hpp"

namespace ellfib {

bool isPrime(const Int& n)
{
    if (n < 2)
        return false;
    // 25 rounds of Miller-Rabin; GMP makes this deterministic enough
    // for the sizes we ever feed it.
    return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

namespace {

Int pollardRho(const Int& n)
{
    // Brent's cycle variant with batched gcds.
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    gmp_randstate_t rng;
    gmp_randinit_mt(rng);
    gmp_randseed_ui(rng, 0x5eedu);
    Int y, c, m = 128, g = 1, r = 1, q = 1, x, ys;
    while (true) {
        mpz_urandomm(y.get_mpz_t(), rng, n.get_mpz_t());
        mpz_urandomm(c.get_mpz_t(), rng, n.get_mpz_t());
        if (c == 0)
            c = 1;
        g = 1;
        r = 1;
        q = 1;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i)
                y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(m, Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_gcd(g.get_mpz_t(), Int(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) {
            gmp_randclear(rng);
            return g;
        }
        // retry with a fresh constant
    }
}

void factorRec(const Int& n, std::vector<Int>& primes)
{
    if (n == 1)
        return;
    if (isPrime(n)) {
        primes.push_back(n);
        return;
    }
    Int d = pollardRho(n);
    factorRec(d, primes);
    factorRec(n / d, primes);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factorInt(const Int& n)
{
    if (n < 1)
        throw ContractError("factorInt: argument must be >= 1");
    std::vector<std::pair<Int, unsigned>> out;
    if (n == 1)
        return out;
    Int m = n;
    // small primes first
    static const unsigned smallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                           41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned p : smallPrimes) {
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            out.emplace_back(Int(p), e);
        }
    }
    // continue trial division by odd numbers while p^2 <= m, up to 10^4
    for (unsigned long p = 101; p < 10000 && m > 1; p += 2) {
        if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) {
            // remaining cofactor is prime
            out.emplace_back(m, 1u);
            m = 1;
            break;
        }
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
                ++e;
            }
            out.emplace_back(Int(p), e);
        }
    }
    if (m > 1) {
        std::vector<Int> primes;
        factorRec(m, primes);
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i])
                ++j;
            out.emplace_back(primes[i], unsigned(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> divisorsOf(const Int& n, std::size_t cap)
{
    Int m = abs(n);
    if (m == 0)
        throw ContractError("divisorsOf: zero has no divisor list");
    auto fac = factorInt(m);
    std::size_t count = 1;
    for (auto& [p, e] : fac) {
        count *= (e + 1);
        if (count > cap)
            throw WorkBudgetError("divisorsOf: more than " + std::to_string(cap) + " divisors");
    }
    std::vector<Int> out{Int(1)};
    for (auto& [p, e] : fac) {
        std::size_t base = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Int> squareDivisorsOf(const Int& n, std::size_t cap)
{
    Int m = abs(n);
    if (m == 0)
        throw ContractError("squareDivisorsOf: zero has no divisor list");
    auto fac = factorInt(m);
    std::size_t count = 1;
    for (auto& [p, e] : fac) {
        count *= (e / 2 + 1);
        if (count > cap)
            throw WorkBudgetError("squareDivisorsOf: divisor cap exceeded");
    }
    std::vector<Int> out{Int(1)};
    for (auto& [p, e] : fac) {
        std::size_t base = out.size();
        Int p2 = p * p, pk = 1;
        for (unsigned k = 1; k + k <= e; ++k) {
            pk *= p2;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ellfib
