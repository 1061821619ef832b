"""Exact Gaussian integer arithmetic, factorization, and sigma scans."""

from ._core import (
    GaussianInt,
    NormOrderedEnumerator,
    associates,
    canonical_primes_up_to,
    canonicalize,
    classify,
    factor,
    gcd,
    is_gaussian_prime,
    norm_perfect_prime_solutions,
    odd_form_decompose,
    parse,
    scan,
    scan_norm_perfect_primes,
    sigma,
    sigma_oracle,
    sigma_prime_power_is_even,
    verify_theorem,
)

__all__ = [
    "GaussianInt",
    "NormOrderedEnumerator",
    "associates",
    "canonical_primes_up_to",
    "canonicalize",
    "classify",
    "factor",
    "gcd",
    "is_gaussian_prime",
    "norm_perfect_prime_solutions",
    "odd_form_decompose",
    "parse",
    "scan",
    "scan_norm_perfect_primes",
    "sigma",
    "sigma_oracle",
    "sigma_prime_power_is_even",
    "verify_theorem",
]
