#include "gaussint/factorization.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>

namespace gaussint {

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::vector<bool> composite(kTrialDivisionLimit + 1, false);
        std::vector<std::uint32_t> out;
        for (std::uint64_t p = 2; p <= kTrialDivisionLimit; ++p) {
            if (composite[p]) continue;
            out.push_back(static_cast<std::uint32_t>(p));
            for (std::uint64_t m = p * p; m <= kTrialDivisionLimit; m += p)
                composite[m] = true;
        }
        return out;
    }();
    return primes;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Deterministic for all 64-bit inputs with this witness set.
bool miller_rabin_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// Brent's cycle variant of Pollard rho; n odd composite. The polynomial
// offset steps deterministically so runs are reproducible.
std::uint64_t pollard_brent_u64(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t power = 1, lam = 0;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (mulmod_u64(y, y, n) + c) % n;
            ++lam;
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);
        }
        if (d != n) return d;
    }
}

void factor_u64_into(std::uint64_t n, std::map<mpz_class, unsigned long>& out) {
    for (std::uint32_t p : small_primes()) {
        std::uint64_t pp = static_cast<std::uint64_t>(p) * p;
        if (pp > n) break;
        while (n % p == 0) {
            n /= p;
            ++out[mpz_class(static_cast<unsigned long>(p))];
        }
    }
    if (n == 1) return;
    if (miller_rabin_u64(n)) {
        ++out[mpz_class(static_cast<unsigned long>(n))];
        return;
    }
    std::uint64_t d = pollard_brent_u64(n);
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

mpz_class pollard_brent_mpz(const mpz_class& n) {
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        unsigned long power = 1, lam = 0;
        while (d == 1) {
            if (power == lam) {
                x = y;
                power *= 2;
                lam = 0;
            }
            y = (y * y + c) % n;
            ++lam;
            mpz_class diff = x > y ? mpz_class(x - y) : mpz_class(y - x);
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_mpz_into(mpz_class n, std::map<mpz_class, unsigned long>& out) {
    if (n == 1) return;
    if (n.fits_ulong_p()) {
        factor_u64_into(n.get_ui(), out);
        return;
    }
    for (std::uint32_t p : small_primes()) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            do {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++out[mpz_class(static_cast<unsigned long>(p))];
            } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
            if (n.fits_ulong_p()) {
                factor_u64_into(n.get_ui(), out);
                return;
            }
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
        ++out[n];
        return;
    }
    mpz_class d = pollard_brent_mpz(n);
    factor_mpz_into(d, out);
    factor_mpz_into(mpz_class(n / d), out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned long>> factor_rational(const mpz_class& n) {
    if (n < 1)
        throw std::invalid_argument("factor_rational: input must be positive");
    std::map<mpz_class, unsigned long> acc;
    factor_mpz_into(n, acc);
    return {acc.begin(), acc.end()};
}

bool is_rational_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return miller_rabin_u64(n.get_ui());
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

mpz_class sqrt_minus_one_mod_p(const mpz_class& p) {
    if (p % 4 != 1 || !is_rational_prime(p))
        throw std::invalid_argument(
            "sqrt_minus_one_mod_p: requires a prime p with p ≡ 1 mod 4");
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0x67617573ul);  // fixed seed, per-call state
    mpz_class exponent = (p - 1) / 4;
    mpz_class minus_one = p - 1;
    for (int attempt = 0; attempt < 256; ++attempt) {
        mpz_class c = rng.get_z_range(p - 3) + 2;
        mpz_class x;
        mpz_powm(x.get_mpz_t(), c.get_mpz_t(), exponent.get_mpz_t(), p.get_mpz_t());
        mpz_class sq = (x * x) % p;
        if (sq == minus_one) {
            mpz_class other = p - x;
            return x < other ? x : other;
        }
    }
    throw std::runtime_error("sqrt_minus_one_mod_p: no residue found; input not prime?");
}

std::vector<GaussianInt> split_prime(const mpz_class& p) {
    if (!is_rational_prime(p))
        throw std::invalid_argument("split_prime: input is not prime");
    if (p == 2) return {GaussianInt{1, 1}};
    if (p % 4 == 3) return {GaussianInt{p, 0}};
    mpz_class x = sqrt_minus_one_mod_p(p);
    GaussianInt pi = gcd(GaussianInt{p, 0}, GaussianInt{x, 1});
    GaussianInt pi_bar = canonicalize(pi.conj()).value;
    assert(pi.norm() == p && pi_bar.norm() == p);
    std::vector<GaussianInt> out{std::move(pi), std::move(pi_bar)};
    std::sort(out.begin(), out.end(), NormLexLess{});
    return out;
}

CanonicalFactorization factor(const GaussianInt& g) {
    if (g.is_zero())
        throw std::invalid_argument("factor: zero cannot be factored");
    mpz_class n = g.norm();
    if (n == 1) return {*Unit::from(g), {}};

    GaussianInt rem = g;
    std::vector<PrimePower> factors;
    for (const auto& [p, e] : factor_rational(n)) {
        (void)e;
        for (const GaussianInt& pi : split_prime(p)) {
            unsigned long k = 0;
            while (auto q = exact_quotient(rem, pi)) {
                rem = std::move(*q);
                ++k;
            }
            if (k > 0) factors.push_back({pi, k});
        }
    }
    auto unit = Unit::from(rem);
    if (!unit)
        throw std::logic_error("factor: residue after division is not a unit");
    std::sort(factors.begin(), factors.end(),
              [](const PrimePower& a, const PrimePower& b) {
                  return norm_lex_less(a.prime, b.prime);
              });
    CanonicalFactorization result{*unit, std::move(factors)};
    assert(result.value() == g);
    return result;
}

bool is_gaussian_prime(const GaussianInt& g) {
    mpz_class n = g.norm();
    if (n <= 1) return false;
    if (is_rational_prime(n)) return true;
    if (g.re == 0 || g.im == 0) {
        mpz_class q = g.re == 0 ? abs(g.im) : abs(g.re);
        return q % 4 == 3 && is_rational_prime(q);
    }
    return false;
}

GaussianInt CanonicalFactorization::value() const {
    GaussianInt result = unit.value();
    for (const auto& [prime, exponent] : factors)
        result = result * pow(prime, exponent);
    return result;
}

std::string CanonicalFactorization::to_string() const {
    std::string out = gaussint::to_string(unit);
    for (const auto& [prime, exponent] : factors) {
        out += " * (";
        out += gaussint::to_string(prime);
        out += ")^";
        out += std::to_string(exponent);
    }
    return out;
}

}  // namespace gaussint
