"""Exact Bernoulli numbers and polynomials, plus two routes to the denominator
of the Bernoulli polynomial without constant term.

The brute-force route builds the polynomial over exact rationals and takes the
lcm of the reduced coefficient denominators; the formula route multiplies the
primes p whose base-p digit sum of n reaches p. Both are exposed so each can
serve as the other's oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm, prod

from .arith import (
    INFINITY,
    Valuation,
    _ord_abs,
    digit_sum,
    ensure_prime,
    primes_up_to,
)

__all__ = [
    "DEFAULT_BERNOULLI_CAP",
    "DenominatorFactorization",
    "RationalPolynomial",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_poly",
    "bernoulli_poly_no_constant",
    "bernoulli_poly_p_part",
    "clausen_denominator",
    "denom_formula",
    "denominator_has_prime",
    "ord_poly",
    "ord_rational",
    "poly_denominator",
    "prime_search_bound",
]

# Refusal threshold for table extension, overridable per call; a guard against
# runaway memory, not a silent truncation.
DEFAULT_BERNOULLI_CAP = 5000

_BERNOULLI: list[Fraction] = [Fraction(1)]


def _extend_bernoulli(n: int) -> None:
    # Standard recurrence sum(comb(m+1, k) * B_k, k=0..m) = 0; odd indices come
    # out as exact zeros rather than being special-cased, so the table itself
    # is evidence for the vanishing of odd entries.
    while len(_BERNOULLI) <= n:
        m = len(_BERNOULLI)
        total = Fraction(0)
        for k in range(m):
            total += comb(m + 1, k) * _BERNOULLI[k]
        _BERNOULLI.append(-total / (m + 1))


def bernoulli_number(n: int, *, cap: int | None = None) -> Fraction:
    """The n-th Bernoulli number as an exact fraction, with B_1 = -1/2."""
    if n < 0:
        raise ValueError(f"index must be non-negative, got {n}")
    limit = DEFAULT_BERNOULLI_CAP if cap is None else cap
    if n > limit:
        raise ValueError(f"index {n} exceeds the table cap {limit}")
    _extend_bernoulli(n)
    return _BERNOULLI[n]


def bernoulli_numbers(n_max: int, *, cap: int | None = None) -> list[Fraction]:
    """The table B_0 .. B_n_max as exact fractions (copied out of the memo)."""
    bernoulli_number(n_max, cap=cap)
    return _BERNOULLI[: n_max + 1]


@dataclass(frozen=True)
class RationalPolynomial:
    """Dense exact-rational coefficients, index = power of x; () is zero."""

    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "RationalPolynomial":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial, with -1 standing in for zero."""
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return Fraction(0)


def bernoulli_poly(n: int) -> RationalPolynomial:
    """The degree-n Bernoulli polynomial sum(C(n,k) B_k x^(n-k), k=0..n)."""
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    table = bernoulli_numbers(n)
    coeffs = [comb(n, n - j) * table[n - j] for j in range(n + 1)]
    return RationalPolynomial.from_coeffs(coeffs)


def bernoulli_poly_no_constant(n: int) -> RationalPolynomial:
    """The Bernoulli polynomial with its constant term removed; n >= 1.

    n = 0 would give the zero polynomial and is rejected.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = list(bernoulli_poly(n).coeffs)
    coeffs[0] = Fraction(0)
    return RationalPolynomial(tuple(coeffs))


def bernoulli_poly_p_part(n: int, p: int) -> RationalPolynomial:
    """Terms C(n,k) B_k x^(n-k) over even k in [2, n-1] with p - 1 dividing k.

    These are the only terms of the constant-free Bernoulli polynomial whose
    coefficients can carry p in the denominator; the result is the zero
    polynomial when p > n.
    """
    ensure_prime(p)
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(2, n, 2):
        if k % (p - 1) == 0:
            coeffs[n - k] = comb(n, k) * bernoulli_number(k)
    return RationalPolynomial.from_coeffs(coeffs)


def poly_denominator(f: RationalPolynomial) -> int:
    """Lcm of the reduced coefficient denominators; 1 for the zero polynomial."""
    return lcm(*(c.denominator for c in f.coeffs))


def ord_rational(q: Fraction, p: int) -> Valuation:
    """p-adic valuation of an exact rational; INFINITY for zero."""
    ensure_prime(p)
    if q == 0:
        return INFINITY
    return _ord_abs(q.numerator, p) - _ord_abs(q.denominator, p)


def ord_poly(f: RationalPolynomial, p: int) -> Valuation:
    """Minimum p-adic valuation over nonzero coefficients; INFINITY for zero."""
    ensure_prime(p)
    best: Valuation = INFINITY
    for c in f.coeffs:
        if c:
            v = _ord_abs(c.numerator, p) - _ord_abs(c.denominator, p)
            if v < best:
                best = v
    return best


def clausen_denominator(n: int) -> int:
    """Denominator of B_n for even n >= 2: the product of primes p with
    p - 1 dividing n."""
    if n < 2 or n % 2:
        raise ValueError(f"defined for even n >= 2, got {n}")
    return prod(p for p in primes_up_to(n + 1) if n % (p - 1) == 0)


def prime_search_bound(n: int) -> int:
    """Largest prime that can divide the constant-free denominator:
    (n+1)/2 for odd n, (n+1)/3 for even n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return (n + 1) // (2 if n % 2 else 3)


@dataclass(frozen=True)
class DenominatorFactorization:
    """Squarefree factorization of the constant-free Bernoulli denominator."""

    n: int
    primes: tuple[int, ...]
    product: int


def denom_formula(n: int, *, search_bound: int | None = None) -> DenominatorFactorization:
    """denom of the constant-free Bernoulli polynomial, as the product of all
    primes p with digit_sum(n, p) >= p.

    The default search stops at prime_search_bound(n), past which no prime can
    qualify; pass a wider search_bound to cross-check that the cutoff loses
    nothing (any p > n has digit sum n < p and never qualifies).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    bound = prime_search_bound(n) if search_bound is None else search_bound
    primes = tuple(p for p in primes_up_to(bound) if digit_sum(n, p) >= p)
    return DenominatorFactorization(n=n, primes=primes, product=prod(primes))


def denominator_has_prime(n: int, p: int) -> bool:
    """Whether p divides the constant-free Bernoulli denominator for n,
    decided by the digit-sum rule alone (no polynomial is built)."""
    ensure_prime(p)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return digit_sum(n, p) >= p
