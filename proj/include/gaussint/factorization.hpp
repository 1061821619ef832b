#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaussint/gaussian_int.hpp"

namespace gaussint {

struct PrimePower {
    GaussianInt prime;
    unsigned long exponent;
};

// unit · ∏ prime^exponent with every prime canonical, pairwise
// non-associate, sorted by (norm, Re, Im).
struct CanonicalFactorization {
    Unit unit;
    std::vector<PrimePower> factors;

    GaussianInt value() const;

    // "unit * (p1)^e1 * (p2)^e2 ...", e.g. "-i * (1+2i)^1 * (2+i)^1".
    std::string to_string() const;
};

// Complete factorization of n >= 1 over the rational integers, primes
// ascending. Trial division by primes below 10^6, then a probabilistic
// primality test plus Pollard-Brent splitting for what survives.
std::vector<std::pair<mpz_class, unsigned long>> factor_rational(const mpz_class& n);

bool is_rational_prime(const mpz_class& n);

// The smaller x in (0, p) with x^2 ≡ -1 (mod p), for a prime p ≡ 1 mod 4.
// Random exponentiation x = c^((p-1)/4) with a fixed seed, retried until
// it lands. Throws std::invalid_argument otherwise.
mpz_class sqrt_minus_one_mod_p(const mpz_class& p);

// Canonical Gaussian prime(s) above a rational prime p, sorted by
// (norm, Re, Im):
//   p = 2        -> {1+i}            (2 = -i·(1+i)^2)
//   p ≡ 3 mod 4  -> {p}              (inert)
//   p ≡ 1 mod 4  -> {π, π'}          (split; π·π' an associate of p)
// Throws std::invalid_argument for non-prime input.
std::vector<GaussianInt> split_prime(const mpz_class& p);

// Canonical factorization of a nonzero Gaussian integer: factor the norm,
// split each rational prime, recover exponents by exact division, and read
// the unit off the fully divided residue.
CanonicalFactorization factor(const GaussianInt& g);

// True iff g is a Gaussian prime or a unit multiple of one: its norm is a
// rational prime, or g is an associate of a rational prime p ≡ 3 mod 4.
bool is_gaussian_prime(const GaussianInt& g);

}  // namespace gaussint
