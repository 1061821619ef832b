#include "gaussint/divisor_theory.hpp"

#include <cassert>
#include <cstddef>
#include <stdexcept>

namespace gaussint {

namespace {

// 1 + pi + pi^2 + ... + pi^k, accumulated Horner-style.
GaussianInt geometric_sum(const GaussianInt& pi, unsigned long k) {
    GaussianInt acc(1, 0);
    for (unsigned long j = 0; j < k; ++j) {
        acc = acc * pi + GaussianInt(1, 0);
    }
    return acc;
}

}  // namespace

GaussianInt sigma(const CanonicalFactorization& f) {
    GaussianInt result(1, 0);
    for (const PrimePower& pp : f.factors) {
        GaussianInt term = geometric_sum(pp.prime, pp.exponent);
#ifndef NDEBUG
        // Same value as (pi^(k+1) - 1) / (pi - 1), which divides exactly.
        const GaussianInt one(1, 0);
        auto quotient =
            exact_quotient(pow(pp.prime, pp.exponent + 1) - one, pp.prime - one);
        assert(quotient && *quotient == term);
#endif
        result = result * term;
    }
    return result;
}

GaussianInt sigma(const GaussianInt& g) {
    if (g.is_zero()) {
        throw std::invalid_argument("sigma is undefined at zero");
    }
    return sigma(factor(g));
}

GaussianInt sigma_oracle(const GaussianInt& g, const mpz_class& norm_bound) {
    if (g.is_zero()) {
        throw std::invalid_argument("sigma is undefined at zero");
    }
    if (g.norm() > norm_bound) {
        throw std::domain_error("norm exceeds the oracle bound");
    }
    CanonicalFactorization f = factor(g);

    // All divisors with unit part 1: pick an exponent for every prime.
    std::vector<GaussianInt> divisors{GaussianInt(1, 0)};
    for (const PrimePower& pp : f.factors) {
        std::vector<GaussianInt> extended;
        extended.reserve(divisors.size() * (pp.exponent + 1));
        for (const GaussianInt& d : divisors) {
            GaussianInt v = d;
            extended.push_back(v);
            for (unsigned long j = 1; j <= pp.exponent; ++j) {
                v = v * pp.prime;
                extended.push_back(v);
            }
        }
        divisors = std::move(extended);
    }

    GaussianInt total(0, 0);
    for (const GaussianInt& d : divisors) {
        total = total + d;
    }
    return total;
}

bool sigma_prime_power_is_even(const GaussianInt& pi, unsigned long m) {
    if (m == 0) {
        throw std::invalid_argument("exponent must be positive");
    }
    if (!pi.is_canonical() || pi.is_even() || !is_gaussian_prime(pi)) {
        throw std::invalid_argument("expected a canonical odd Gaussian prime");
    }
    return geometric_sum(pi, m).is_even();
}

PerfectionReport classify(const GaussianInt& g) {
    if (g.is_zero()) {
        throw std::invalid_argument("cannot classify zero");
    }
    PerfectionReport report;
    report.subject = g;
    report.parity = parity_of(g);
    report.sigma = sigma(g);
    report.norm_sigma = report.sigma.norm();
    report.two_norm = 2 * g.norm();
    report.norm_perfect = (report.norm_sigma == report.two_norm);

    // sigma is constant across associates; the target (1+i)*eps*canon is not,
    // so at most one unit can match.
    const GaussianInt one_plus_i(1, 1);
    const GaussianInt canon = canonicalize(g).value;
    for (unsigned k = 0; k < 4; ++k) {
        Unit eps = Unit::i_power(k);
        if (report.sigma == one_plus_i * (eps.value() * canon)) {
            report.perfect_unit = eps;
            break;
        }
    }
    // Perfect implies norm-perfect.
    assert(!report.perfect_unit.has_value() || report.norm_perfect);
    return report;
}

std::string to_json(const PerfectionReport& report) {
    std::string out = "{\"subject\":\"";
    out += to_string(report.subject);
    out += "\",\"parity\":\"";
    out += to_string(report.parity);
    out += "\",\"sigma\":\"";
    out += to_string(report.sigma);
    out += "\",\"normSigma\":";
    out += report.norm_sigma.get_str();
    out += ",\"twoNorm\":";
    out += report.two_norm.get_str();
    out += ",\"normPerfect\":";
    out += report.norm_perfect ? "true" : "false";
    out += ",\"perfectUnit\":";
    if (report.perfect_unit.has_value()) {
        out += "\"";
        out += to_string(report.perfect_unit->value());
        out += "\"";
    } else {
        out += "null";
    }
    out += "}";
    return out;
}

OddFormDecomposition odd_form_decompose(const GaussianInt& g) {
    if (g.is_zero()) {
        throw std::invalid_argument("cannot decompose zero");
    }
    if (g.is_unit()) {
        throw std::invalid_argument("cannot decompose a unit");
    }
    if (g.is_even()) {
        throw std::invalid_argument("expected an odd value");
    }

    CanonicalFactorization f = factor(g);
    const PrimePower* odd_power = nullptr;
    std::size_t odd_count = 0;
    for (const PrimePower& pp : f.factors) {
        if (pp.exponent % 2 == 1) {
            odd_power = &pp;
            ++odd_count;
        }
    }
    if (odd_count != 1) {
        throw euler_form_error("not of Euler form");
    }

    OddFormDecomposition d;
    d.pi = odd_power->prime;
    d.k = odd_power->exponent;

    GaussianInt gamma_raw(1, 0);
    for (const PrimePower& pp : f.factors) {
        if (&pp == odd_power) {
            continue;
        }
        gamma_raw = gamma_raw * pow(pp.prime, pp.exponent / 2);
    }
    // A product of canonical primes need not be canonical; fold the squared
    // adjustment unit back into the leading unit.
    Canonicalized gc = canonicalize(gamma_raw);
    d.gamma = gc.value;
    d.unit = f.unit * gc.unit * gc.unit;

    assert(gcd(d.pi, d.gamma) == GaussianInt(1, 0));
    assert(d.unit.value() * pow(d.pi, d.k) * (d.gamma * d.gamma) == g);
    return d;
}

std::string to_json(const OddFormDecomposition& d) {
    std::string out = "{\"pi\":\"";
    out += to_string(d.pi);
    out += "\",\"k\":";
    out += std::to_string(d.k);
    out += ",\"gamma\":\"";
    out += to_string(d.gamma);
    out += "\",\"unit\":\"";
    out += to_string(d.unit.value());
    out += "\"}";
    return out;
}

NormPerfectPrimeClassification norm_perfect_prime_solutions() {
    NormPerfectPrimeClassification result;
    // (a-1)^2 + b^2 = 2 confines a-1 and b to [-1, 1]; the window is padded.
    for (long a = -2; a <= 4; ++a) {
        for (long b = -3; b <= 3; ++b) {
            if ((a - 1) * (a - 1) + b * b == 2) {
                result.solutions.emplace_back(a, b);
            }
        }
    }
    for (const auto& [a, b] : result.solutions) {
        GaussianInt candidate(a, b);
        if (is_gaussian_prime(candidate)) {
            result.primes.push_back(candidate);
        }
    }
    return result;
}

}  // namespace gaussint
