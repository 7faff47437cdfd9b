"""Exact denominators of Bernoulli polynomials without constant term.

The denominator of B_n(x) - B_n is squarefree and equals the product of the
primes p whose base-p digit sum of n reaches p; equivalently, p divides it
exactly when the fractional parts of n/p^nu sum to more than 1. This package
computes the denominator both by that digit-sum rule and by brute-force
construction of the polynomial over exact rationals, and ships exhaustive
desk-scale suites that check the two routes and the fractional-part
correspondence against each other.
"""

from .arith import (
    INFINITY,
    DigitExpansion,
    Valuation,
    digit_expansion,
    digit_sum,
    ensure_prime,
    frac_sum,
    frac_sum_digit,
    frac_sum_direct,
    fracsum_is_integer,
    is_prime,
    kummer_carries,
    lucas_binom_mod,
    ord_binomial,
    ord_factorial,
    ord_int,
    primes_up_to,
    witness_k,
)
from .bernoulli import (
    DEFAULT_BERNOULLI_CAP,
    DenominatorFactorization,
    RationalPolynomial,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_poly,
    bernoulli_poly_no_constant,
    bernoulli_poly_p_part,
    clausen_denominator,
    denom_formula,
    denominator_has_prime,
    ord_poly,
    ord_rational,
    poly_denominator,
    prime_search_bound,
)
from .verify import (
    DEFAULT_K_CAP,
    SUITE_NAMES,
    DigitSumGrowth,
    PowerScanResult,
    VerificationReport,
    digit_sum_growth,
    is_power_of,
    merge_reports,
    power_scan,
    run_suite,
    stewart_bound,
    verify_binomial_valuations,
    verify_correspondence,
    verify_prime_bound,
    verify_squarefree,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_BERNOULLI_CAP",
    "DEFAULT_K_CAP",
    "INFINITY",
    "SUITE_NAMES",
    "DenominatorFactorization",
    "DigitExpansion",
    "DigitSumGrowth",
    "PowerScanResult",
    "RationalPolynomial",
    "Valuation",
    "VerificationReport",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_poly",
    "bernoulli_poly_no_constant",
    "bernoulli_poly_p_part",
    "clausen_denominator",
    "denom_formula",
    "denominator_has_prime",
    "digit_expansion",
    "digit_sum",
    "digit_sum_growth",
    "ensure_prime",
    "frac_sum",
    "frac_sum_digit",
    "frac_sum_direct",
    "fracsum_is_integer",
    "is_power_of",
    "is_prime",
    "kummer_carries",
    "lucas_binom_mod",
    "merge_reports",
    "ord_binomial",
    "ord_factorial",
    "ord_int",
    "ord_poly",
    "ord_rational",
    "poly_denominator",
    "power_scan",
    "prime_search_bound",
    "primes_up_to",
    "run_suite",
    "stewart_bound",
    "verify_binomial_valuations",
    "verify_correspondence",
    "verify_prime_bound",
    "verify_squarefree",
    "witness_k",
    "__version__",
]
