#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tripairs {

// Exact arbitrary-precision integers and rationals. GMP supplies the raw
// arithmetic; everything here is the number theory layered on top.
using BigInt = mpz_class;
using BigRat = mpq_class;

// A rational in canonical lowest terms (den > 0, gcd(|num|, den) = 1).
BigRat make_rat(const BigInt& num, const BigInt& den);

// Parses "123", "-4/7". Throws std::invalid_argument on malformed input.
BigInt parse_int(const std::string& s);
BigRat parse_rat(const std::string& s);

std::string to_string(const BigInt& n);
std::string to_string(const BigRat& q);

bool is_perfect_square(const BigInt& n);

// Exact integer square root, or nullopt if n is negative or not a square.
std::optional<BigInt> exact_sqrt(const BigInt& n);

// Nonnegative rational square root when both numerator and denominator are
// perfect squares; nullopt otherwise.
std::optional<BigRat> rational_sqrt(const BigRat& q);

struct Factorization {
    // (prime, exponent), primes strictly increasing. Empty for |n| = 1.
    std::vector<std::pair<BigInt, unsigned>> factors;

    BigInt recompose() const;
};

// Deterministic below 3.317e24 (Miller-Rabin over the first 13 prime bases);
// BPSW plus random rounds above that.
bool is_prime(const BigInt& n);

// Exact prime factorization of |n|. Trial division, then Brent's rho on the
// cofactor. Throws std::invalid_argument on n = 0.
Factorization factorize(const BigInt& n);

// The unique squarefree d with n = d*m^2, sign preserved. Throws on n = 0.
BigInt squarefree_part(const BigInt& n);
BigInt squarefree_part(const Factorization& f, bool negative);

BigInt lcm(const BigInt& a, const BigInt& b);

} // namespace tripairs
