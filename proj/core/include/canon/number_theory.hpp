#pragma once

#include "canon/bigint.hpp"

#include <utility>
#include <vector>

namespace canon::algebra {

struct Primality {
    bool prime = false;
    // False when |n| >= 2^64 and the verdict rests on the probabilistic test
    // (error below 2^-128).
    bool proven = true;
};

Primality primality(const BigInt& n);
inline bool is_prime(const BigInt& n) { return primality(n).prime; }

struct PrimePower {
    BigInt prime;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Factorization of |n| in increasing prime order; requires |n| >= 2.
std::vector<PrimePower> factorize(const BigInt& n);
std::vector<BigInt> prime_factors(const BigInt& n);
// |n| has no repeated prime factor; 0 is not square-free, ±1 is.
bool is_squarefree(const BigInt& n);

// Smallest non-negative x with x ≡ r_i (mod m_i). Moduli need not be
// coprime; inconsistent systems throw DomainError.
BigInt crt(const std::vector<std::pair<BigInt, BigInt>>& congruences);

// Fundamental solution (z, y) of z² − D y² = 1 by the continued fraction of √D.
std::pair<BigInt, BigInt> pell_min(const BigInt& D);

}  // namespace canon::algebra
