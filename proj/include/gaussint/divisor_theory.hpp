#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussint/factorization.hpp"
#include "gaussint/gaussian_int.hpp"

namespace gaussint {

// Sum-of-divisors over the canonical factorization,
//   σ(η) = ∏ (π^(k+1) - 1) / (π - 1),
// computed per prime power as the geometric sum 1 + π + ... + π^k.
// σ of a unit is 1; σ depends only on the associate class.
// Throws std::invalid_argument for zero.
GaussianInt sigma(const GaussianInt& g);
GaussianInt sigma(const CanonicalFactorization& f);

inline constexpr unsigned long kDefaultOracleNormBound = 100'000'000;

// Independent check of σ: sums every divisor ∏ π^j (unit part 1)
// enumerated from the canonical factorization. Refuses inputs with norm
// above the oracle bound (std::domain_error).
GaussianInt sigma_oracle(const GaussianInt& g,
                         const mpz_class& norm_bound = kDefaultOracleNormBound);

// Parity of σ(π^m) for a canonical odd Gaussian prime π and m >= 1.
// Equals (m odd) for every such π. Throws std::invalid_argument when π is
// even, non-canonical, or not prime, or when m is zero.
bool sigma_prime_power_is_even(const GaussianInt& pi, unsigned long m);

// Everything the perfect / norm-perfect predicates need about one value.
// norm-perfect: N(σ(η)) = 2·N(η). perfect: σ(η) = (1+i)·η, which is
// unit-sensitive, so the unit (if any) whose associate satisfies it is
// reported separately. Perfect implies norm-perfect.
struct PerfectionReport {
    GaussianInt subject;
    Parity parity;
    GaussianInt sigma;
    mpz_class norm_sigma;
    mpz_class two_norm;
    bool norm_perfect = false;
    std::optional<Unit> perfect_unit;
};

// Throws std::invalid_argument for zero.
PerfectionReport classify(const GaussianInt& g);

// Single JSON object with fields subject, parity, sigma, normSigma,
// twoNorm, normPerfect, perfectUnit (null when absent).
std::string to_json(const PerfectionReport& report);

class euler_form_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Witness of the π^k γ² form: unit · pi^k · gamma² reconstructs the
// subject, k odd, gcd(pi, gamma) = 1, pi an odd canonical prime.
struct OddFormDecomposition {
    GaussianInt pi;
    unsigned long k = 0;
    GaussianInt gamma;
    Unit unit;
};

// Decomposes an odd non-unit whose factorization has exactly one odd
// exponent. Throws euler_form_error ("not of Euler form") when zero or
// two-plus exponents are odd; std::invalid_argument on even/unit/zero input.
OddFormDecomposition odd_form_decompose(const GaussianInt& g);

// {"pi": ..., "k": ..., "gamma": ..., "unit": ...}
std::string to_json(const OddFormDecomposition& d);

// The raw prime screen for N(σ(π)) = 2N(π) with σ(π) = π + 1: the four
// integer solutions of (a-1)² + b² = 2, and the a+bi among them that are
// Gaussian primes (in any quadrant).
struct NormPerfectPrimeClassification {
    std::vector<std::pair<long, long>> solutions;
    std::vector<GaussianInt> primes;
};

NormPerfectPrimeClassification norm_perfect_prime_solutions();

}  // namespace gaussint
