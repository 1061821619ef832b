#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "gaussint/factorization.hpp"
#include "gaussint/gaussian_int.hpp"
#include "oracles.hpp"

using gaussint::CanonicalFactorization;
using gaussint::GaussianInt;
using gaussint::Unit;

namespace {

GaussianInt gi(long re, long im) {
    return GaussianInt(mpz_class(re), mpz_class(im));
}

}  // namespace

TEST_CASE("rational factorization matches trial division") {
    CHECK(gaussint::factor_rational(1).empty());
    CHECK(gaussint::factor_rational(50) ==
          std::vector<std::pair<mpz_class, unsigned long>>{{2, 1}, {5, 2}});
    CHECK(gaussint::factor_rational(9999) ==
          std::vector<std::pair<mpz_class, unsigned long>>{
              {3, 2}, {11, 1}, {101, 1}});

    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::uint64_t> dist(2, 10'000'000);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t n = dist(rng);
        const auto expected = oracles::factor_rational_naive(n);
        const auto got = gaussint::factor_rational(mpz_class(static_cast<unsigned long>(n)));
        REQUIRE(got.size() == expected.size());
        auto it = expected.begin();
        for (const auto& [p, e] : got) {
            CHECK(p == mpz_class(static_cast<unsigned long>(it->first)));
            CHECK(e == it->second);
            ++it;
        }
    }
}

TEST_CASE("rational factorization beyond the trial-division limit") {
    // Both factors exceed 10^6, forcing the probabilistic splitting path.
    const mpz_class p("1000003");
    const mpz_class q("1000033");
    const auto split = gaussint::factor_rational(p * q);
    REQUIRE(split.size() == 2);
    CHECK(split[0] == std::pair<mpz_class, unsigned long>(p, 1));
    CHECK(split[1] == std::pair<mpz_class, unsigned long>(q, 1));

    const auto square = gaussint::factor_rational(p * p);
    REQUIRE(square.size() == 1);
    CHECK(square[0] == std::pair<mpz_class, unsigned long>(p, 2));

    // 2^64 - 1 = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417.
    mpz_class two_to_64;
    mpz_ui_pow_ui(two_to_64.get_mpz_t(), 2, 64);
    const auto mersenne_like = gaussint::factor_rational(two_to_64 - 1);
    mpz_class product = 1;
    for (const auto& [prime, exponent] : mersenne_like) {
        CHECK(gaussint::is_rational_prime(prime));
        for (unsigned long j = 0; j < exponent; ++j) {
            product *= prime;
        }
    }
    CHECK(product == two_to_64 - 1);
    REQUIRE(mersenne_like.size() == 7);
    CHECK(mersenne_like.front().first == 3);
    CHECK(mersenne_like.back().first == 6700417);
}

TEST_CASE("rational primality agrees with the naive sieve") {
    for (std::uint64_t n = 0; n <= 10'000; ++n) {
        CHECK(gaussint::is_rational_prime(mpz_class(static_cast<unsigned long>(n))) ==
              oracles::is_rational_prime_naive(n));
    }
    // Carmichael numbers and a strong pseudoprime to small bases.
    CHECK_FALSE(gaussint::is_rational_prime(561));
    CHECK_FALSE(gaussint::is_rational_prime(41041));
    CHECK_FALSE(gaussint::is_rational_prime(mpz_class("3215031751")));
    mpz_class mersenne61;
    mpz_ui_pow_ui(mersenne61.get_mpz_t(), 2, 61);
    CHECK(gaussint::is_rational_prime(mersenne61 - 1));
}

TEST_CASE("square root of minus one") {
    CHECK(gaussint::sqrt_minus_one_mod_p(5) == 2);
    CHECK(gaussint::sqrt_minus_one_mod_p(13) == 5);
    CHECK(gaussint::sqrt_minus_one_mod_p(17) == 4);

    for (std::uint64_t p = 5; p <= 10'000; p += 4) {
        if (!oracles::is_rational_prime_naive(p)) {
            continue;
        }
        const mpz_class x =
            gaussint::sqrt_minus_one_mod_p(mpz_class(static_cast<unsigned long>(p)));
        CHECK(x > 0);
        CHECK(2 * x < mpz_class(static_cast<unsigned long>(p)));
        CHECK((x * x + 1) % mpz_class(static_cast<unsigned long>(p)) == 0);
    }

    CHECK_THROWS_AS(gaussint::sqrt_minus_one_mod_p(7), std::invalid_argument);
    CHECK_THROWS_AS(gaussint::sqrt_minus_one_mod_p(2), std::invalid_argument);
    CHECK_THROWS_AS(gaussint::sqrt_minus_one_mod_p(9), std::invalid_argument);
    CHECK_THROWS_AS(gaussint::sqrt_minus_one_mod_p(1), std::invalid_argument);
}

TEST_CASE("prime splitting above rational primes") {
    CHECK(gaussint::split_prime(2) == std::vector<GaussianInt>{gi(1, 1)});
    CHECK(gaussint::split_prime(7) == std::vector<GaussianInt>{gi(7, 0)});
    CHECK(gaussint::split_prime(5) == std::vector<GaussianInt>{gi(1, 2), gi(2, 1)});
    CHECK(gaussint::split_prime(13) ==
          std::vector<GaussianInt>{gi(2, 3), gi(3, 2)});
    CHECK_THROWS_AS(gaussint::split_prime(6), std::invalid_argument);
    CHECK_THROWS_AS(gaussint::split_prime(1), std::invalid_argument);

    for (std::uint64_t p = 5; p <= 10'000; p += 4) {
        if (!oracles::is_rational_prime_naive(p)) {
            continue;
        }
        const auto pair =
            gaussint::split_prime(mpz_class(static_cast<unsigned long>(p)));
        REQUIRE(pair.size() == 2);
        const mpz_class pz(static_cast<unsigned long>(p));
        CHECK(pair[0].norm() == pz);
        CHECK(pair[1].norm() == pz);
        CHECK(pair[0].is_canonical());
        CHECK(pair[1].is_canonical());
        CHECK(pair[0] != pair[1]);
        const GaussianInt product = pair[0] * pair[1];
        CHECK(gaussint::canonicalize(product).value ==
              gaussint::canonicalize(gi(static_cast<long>(p), 0)).value);
    }
}

TEST_CASE("canonical factorization of known values") {
    const auto two = gaussint::factor(gi(2, 0));
    CHECK(two.unit == Unit::minus_i());
    REQUIRE(two.factors.size() == 1);
    CHECK(two.factors[0].prime == gi(1, 1));
    CHECK(two.factors[0].exponent == 2);

    const auto five = gaussint::factor(gi(5, 0));
    CHECK(five.unit == Unit::minus_i());
    REQUIRE(five.factors.size() == 2);
    CHECK(five.factors[0].prime == gi(1, 2));
    CHECK(five.factors[0].exponent == 1);
    CHECK(five.factors[1].prime == gi(2, 1));
    CHECK(five.factors[1].exponent == 1);
    CHECK(five.to_string() == "-i * (1+2i)^1 * (2+i)^1");

    const auto prime = gaussint::factor(gi(2, 1));
    CHECK(prime.unit == Unit::one());
    REQUIRE(prime.factors.size() == 1);
    CHECK(prime.factors[0].prime == gi(2, 1));
    CHECK(prime.factors[0].exponent == 1);

    // (2+i)^3 (1+2i)^2 = -50-25i, already unit-free.
    const auto mixed = gaussint::factor(gi(-50, -25));
    CHECK(mixed.unit == Unit::one());
    REQUIRE(mixed.factors.size() == 2);
    CHECK(mixed.factors[0].prime == gi(1, 2));
    CHECK(mixed.factors[0].exponent == 2);
    CHECK(mixed.factors[1].prime == gi(2, 1));
    CHECK(mixed.factors[1].exponent == 3);

    for (long k = 0; k < 4; ++k) {
        const GaussianInt u = Unit::i_power(static_cast<unsigned>(k)).value();
        const auto f = gaussint::factor(u);
        CHECK(f.factors.empty());
        CHECK(f.unit.value() == u);
    }
    CHECK(gaussint::factor(gi(1, 0)).to_string() == "1");
    CHECK_THROWS_AS(gaussint::factor(gi(0, 0)), std::invalid_argument);
}

TEST_CASE("factorization round-trips and stays canonical") {
    std::mt19937 rng(22);
    std::uniform_int_distribution<long> dist(-1000, 1000);
    int checked = 0;
    while (checked < 300) {
        const GaussianInt g = gi(dist(rng), dist(rng));
        if (g.is_zero()) {
            continue;
        }
        ++checked;
        const CanonicalFactorization f = gaussint::factor(g);
        CHECK(f.value() == g);

        mpz_class norm_product = 1;
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            const auto& [prime, exponent] = f.factors[i];
            CHECK(prime.is_canonical());
            CHECK(gaussint::is_gaussian_prime(prime));
            CHECK(exponent >= 1);
            if (i > 0) {
                CHECK(gaussint::norm_lex_less(f.factors[i - 1].prime, prime));
            }
            for (unsigned long j = 0; j < exponent; ++j) {
                norm_product *= prime.norm();
            }
        }
        CHECK(norm_product == g.norm());
    }
}

TEST_CASE("gaussian primality predicate") {
    CHECK(gaussint::is_gaussian_prime(gi(2, 1)));
    CHECK(gaussint::is_gaussian_prime(gi(3, 0)));
    CHECK_FALSE(gaussint::is_gaussian_prime(gi(2, 0)));
    CHECK(gaussint::is_gaussian_prime(gi(1, 1)));
    CHECK(gaussint::is_gaussian_prime(gi(2, -1)));
    CHECK(gaussint::is_gaussian_prime(gi(-3, 0)));
    CHECK(gaussint::is_gaussian_prime(gi(0, 3)));
    CHECK_FALSE(gaussint::is_gaussian_prime(gi(5, 0)));
    CHECK_FALSE(gaussint::is_gaussian_prime(gi(3, 1)));
    CHECK_FALSE(gaussint::is_gaussian_prime(gi(1, 0)));
    CHECK_FALSE(gaussint::is_gaussian_prime(gi(0, 0)));
    CHECK_FALSE(gaussint::is_gaussian_prime(gi(49, 0)));

    // Exhaustive agreement with the naive divisor scan.
    for (long a = 1; a * a <= 2000; ++a) {
        for (long b = 0; a * a + b * b <= 2000; ++b) {
            const GaussianInt g = gi(a, b);
            CHECK(gaussint::is_gaussian_prime(g) ==
                  oracles::is_gaussian_prime_naive(g));
        }
    }
}
