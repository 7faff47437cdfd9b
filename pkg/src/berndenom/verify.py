"""Exhaustive desk-scale verification suites with machine-readable reports.

Each suite sweeps a finite parameter range, records every failing case with
its witness values, and can be sharded over processes; shard results merge
associatively, so the outcome is independent of the degree of parallelism.
"""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import (
    digit_sum,
    ensure_prime,
    frac_sum,
    kummer_carries,
    lucas_binom_mod,
    ord_binomial,
    primes_up_to,
)
from .bernoulli import (
    bernoulli_poly_no_constant,
    ord_poly,
    poly_denominator,
    prime_search_bound,
)

__all__ = [
    "DEFAULT_K_CAP",
    "SUITE_NAMES",
    "DigitSumGrowth",
    "PowerScanResult",
    "VerificationReport",
    "digit_sum_growth",
    "is_power_of",
    "merge_reports",
    "power_scan",
    "run_suite",
    "stewart_bound",
    "verify_binomial_valuations",
    "verify_correspondence",
    "verify_prime_bound",
    "verify_squarefree",
]

DEFAULT_K_CAP = 64

VALUATION_PRIMES = (2, 3, 5, 7, 11, 13)

SUITE_NAMES = ("main", "bound", "squarefree", "binom")


@dataclass
class VerificationReport:
    """Outcome of one exhaustive sweep; failures carry inspectable witnesses."""

    suite: str
    range_checked: str
    cases_total: int
    failures: list[tuple] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def cases_failed(self) -> int:
        return len(self.failures)

    @property
    def passed(self) -> bool:
        return not self.failures


def _check_range(n_lo: int, n_hi: int, least: int = 1) -> None:
    if n_lo < least or n_lo > n_hi:
        raise ValueError(f"need {least} <= n_lo <= n_hi, got [{n_lo}, {n_hi}]")


def verify_correspondence(n_lo: int, n_hi: int, p_max: int | None = None) -> VerificationReport:
    """Check that the fractional-part sum for (n, p) exceeds 1 exactly when p
    divides the brute-force denominator of the constant-free Bernoulli
    polynomial.

    Primes p > n need no sweep: the sum collapses to n/(p-1) <= 1 and the
    denominator has no factor above n, so both sides are false. The sweep up
    to p_max (default n_hi + 1) therefore covers the unrestricted statement.
    """
    _check_range(n_lo, n_hi)
    if p_max is None:
        p_max = n_hi + 1
    start = time.perf_counter()
    primes = primes_up_to(p_max)
    failures: list[tuple] = []
    cases = 0
    for n in range(n_lo, n_hi + 1):
        denom = poly_denominator(bernoulli_poly_no_constant(n))
        for p in primes:
            cases += 1
            value = frac_sum(n, p)
            if (value > 1) != (denom % p == 0):
                failures.append((n, p, value, denom))
    return VerificationReport(
        "main",
        _describe("main", n_lo, n_hi, p_max),
        cases,
        failures,
        time.perf_counter() - start,
    )


def verify_prime_bound(n_lo: int, n_hi: int, p_max: int | None = None) -> VerificationReport:
    """Check that primes beyond (n+1)/2 (odd n) or (n+1)/3 (even n) never push
    the fractional-part sum above 1, sweeping p up to a ceiling of 2 * n_hi."""
    _check_range(n_lo, n_hi)
    if p_max is None:
        p_max = 2 * n_hi
    start = time.perf_counter()
    primes = primes_up_to(p_max)
    failures: list[tuple] = []
    cases = 0
    for n in range(n_lo, n_hi + 1):
        lam = 2 if n % 2 else 3
        for p in primes:
            if lam * p <= n + 1:
                continue
            cases += 1
            value = frac_sum(n, p)
            if value > 1:
                failures.append((n, p, value, 1))
    return VerificationReport(
        "bound",
        _describe("bound", n_lo, n_hi, p_max),
        cases,
        failures,
        time.perf_counter() - start,
    )


def verify_squarefree(n_lo: int, n_hi: int, p_max: int | None = None) -> VerificationReport:
    """Check that every coefficient-minimum valuation of the constant-free
    Bernoulli polynomial is -1 or 0, which makes its denominator squarefree."""
    _check_range(n_lo, n_hi)
    start = time.perf_counter()
    failures: list[tuple] = []
    cases = 0
    for n in range(n_lo, n_hi + 1):
        f = bernoulli_poly_no_constant(n)
        for p in primes_up_to(n + 1):
            cases += 1
            v = ord_poly(f, p)
            if v != 0 and v != -1:
                failures.append((n, p, v, "-1 or 0"))
    return VerificationReport(
        "squarefree",
        _describe("squarefree", n_lo, n_hi, None),
        cases,
        failures,
        time.perf_counter() - start,
    )


def _ord_exact(m: int, p: int) -> int:
    # factor-counting oracle for positive integers, test-side route
    v = 0
    while m % p == 0:
        v += 1
        m //= p
    return v


def verify_binomial_valuations(
    n_lo: int, n_hi: int, primes: tuple[int, ...] = VALUATION_PRIMES
) -> VerificationReport:
    """Check ord_p C(n,k) three ways (factorial valuations, carry count, exact
    factor count of the big integer) and the digitwise product against
    C(n,k) mod p."""
    _check_range(n_lo, n_hi, least=0)
    for p in primes:
        ensure_prime(p)
    start = time.perf_counter()
    failures: list[tuple] = []
    cases = 0
    for n in range(n_lo, n_hi + 1):
        for k in range(n + 1):
            c = math.comb(n, k)
            for p in primes:
                cases += 1
                v_legendre = ord_binomial(n, k, p)
                v_carries = kummer_carries(n, k, p)
                v_exact = _ord_exact(c, p)
                residue = lucas_binom_mod(n, k, p)
                ok = (
                    v_legendre == v_carries == v_exact
                    and residue == c % p
                    and (residue != 0) == (v_exact == 0)
                )
                if not ok:
                    failures.append(
                        (n, p, (k, v_legendre, v_carries, v_exact), (residue, c % p))
                    )
    return VerificationReport(
        "binom",
        _describe("binom", n_lo, n_hi, None, primes),
        cases,
        failures,
        time.perf_counter() - start,
    )


def _describe(
    suite: str,
    n_lo: int,
    n_hi: int,
    p_max: int | None,
    primes: tuple[int, ...] = VALUATION_PRIMES,
) -> str:
    if suite == "main":
        return f"n in [{n_lo}, {n_hi}], primes p <= {p_max}"
    if suite == "bound":
        return f"n in [{n_lo}, {n_hi}], primes p above (n+1)/2 or (n+1)/3 up to {p_max}"
    if suite == "squarefree":
        return f"n in [{n_lo}, {n_hi}], primes p <= n+1"
    if suite == "binom":
        return f"n in [{n_lo}, {n_hi}], 0 <= k <= n, p in {list(primes)}"
    raise ValueError(f"unknown suite {suite!r}")


def merge_reports(reports: list[VerificationReport]) -> VerificationReport:
    """Combine shard reports of one suite; totals add, failures concatenate."""
    if not reports:
        raise ValueError("nothing to merge")
    suite = reports[0].suite
    if any(r.suite != suite for r in reports):
        raise ValueError("cannot merge reports from different suites")
    return VerificationReport(
        suite,
        reports[0].range_checked,
        sum(r.cases_total for r in reports),
        [f for r in reports for f in r.failures],
        sum(r.elapsed for r in reports),
    )


def _suite_shard(suite: str, n_lo: int, n_hi: int, p_max: int | None) -> VerificationReport:
    if suite == "main":
        return verify_correspondence(n_lo, n_hi, p_max)
    if suite == "bound":
        return verify_prime_bound(n_lo, n_hi, p_max)
    if suite == "squarefree":
        return verify_squarefree(n_lo, n_hi)
    if suite == "binom":
        return verify_binomial_valuations(n_lo, n_hi)
    raise ValueError(f"unknown suite {suite!r}")


def _shard_bounds(n_lo: int, n_hi: int, parts: int) -> list[tuple[int, int]]:
    total = n_hi - n_lo + 1
    size, extra = divmod(total, parts)
    bounds = []
    start = n_lo
    for i in range(parts):
        length = size + (1 if i < extra else 0)
        if length:
            bounds.append((start, start + length - 1))
            start += length
    return bounds


def run_suite(suite: str, n_max: int, jobs: int | None = None) -> VerificationReport:
    """Run one named suite over 1..n_max (0..n_max for binom), optionally
    sharded over processes; the report is identical for every jobs value."""
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    n_lo = 0 if suite == "binom" else 1
    p_max = n_max + 1 if suite == "main" else 2 * n_max if suite == "bound" else None
    start = time.perf_counter()
    shards = _shard_bounds(n_lo, n_max, min(jobs, n_max - n_lo + 1))
    if len(shards) == 1:
        report = _suite_shard(suite, n_lo, n_max, p_max)
    else:
        with ProcessPoolExecutor(max_workers=len(shards)) as pool:
            parts = list(
                pool.map(
                    _suite_shard,
                    [suite] * len(shards),
                    [lo for lo, _ in shards],
                    [hi for _, hi in shards],
                    [p_max] * len(shards),
                )
            )
        report = merge_reports(parts)
        report.range_checked = _describe(suite, n_lo, n_max, p_max)
    report.elapsed = time.perf_counter() - start
    return report


def is_power_of(n: int, p: int) -> bool:
    """Whether n is a pure power of p (including p^0 = 1), by repeated division."""
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class PowerScanResult:
    """Per-prime minimal exponents k with digit_sum(n^k, p) >= p.

    threshold is the maximum of the per-prime minima (None while capped): from
    that exponent on, every scanned prime passed the digit-sum criterion at
    its own minimum, and the scan records exactly where.
    """

    n: int
    prime_set: tuple[int, ...]
    min_k: dict[int, int | None]
    threshold: int | None
    k_cap: int
    capped: bool


def power_scan(n: int, prime_set, k_cap: int = DEFAULT_K_CAP) -> PowerScanResult:
    """Smallest k per prime with digit_sum(n^k, p) >= p, scanning k <= k_cap.

    digit_sum(n^k, p) >= p is exactly the condition for p to divide the
    constant-free Bernoulli denominator at index n^k. Raises when n is a pure
    power of some listed p, since then every n^k has a single nonzero base-p
    digit and the criterion can never be met.
    """
    if n <= 1:
        raise ValueError(f"n must be > 1, got {n}")
    if k_cap < 1:
        raise ValueError(f"k_cap must be >= 1, got {k_cap}")
    primes = tuple(sorted(set(prime_set)))
    if not primes:
        raise ValueError("prime_set must not be empty")
    for p in primes:
        ensure_prime(p)
        if is_power_of(n, p):
            raise ValueError(
                f"{n} is a power of {p}: every power of {n} has base-{p} "
                f"digit sum 1, so the scan cannot terminate"
            )
    found: dict[int, int | None] = {p: None for p in primes}
    pending = set(primes)
    nk = 1
    for k in range(1, k_cap + 1):
        nk *= n
        for p in sorted(pending):
            if digit_sum(nk, p) >= p:
                found[p] = k
                pending.discard(p)
        if not pending:
            break
    capped = bool(pending)
    threshold = None if capped else max(v for v in found.values() if v is not None)
    return PowerScanResult(n, primes, found, threshold, k_cap, capped)


@dataclass(frozen=True)
class DigitSumGrowth:
    """Digit sums of successive powers with their running maximum.

    A finite sample can only suggest unbounded growth, never establish it;
    strictly_increasing is True only when every sampled power sets a new
    record, and the raw samples are kept for any other diagnostic.
    """

    n: int
    p: int
    samples: tuple[tuple[int, int], ...]
    running_max: tuple[int, ...]
    strictly_increasing: bool


def digit_sum_growth(n: int, p: int, k_cap: int = DEFAULT_K_CAP) -> DigitSumGrowth:
    """The series digit_sum(n^k, p) for k = 1..k_cap, with running maximum."""
    ensure_prime(p)
    if n <= 1:
        raise ValueError(f"n must be > 1, got {n}")
    if k_cap < 1:
        raise ValueError(f"k_cap must be >= 1, got {k_cap}")
    if is_power_of(n, p):
        raise ValueError(
            f"{n} is a power of {p}: the base-{p} digit sum of its powers is "
            f"constant 1"
        )
    samples = []
    running = []
    best = 0
    nk = 1
    for k in range(1, k_cap + 1):
        nk *= n
        s = digit_sum(nk, p)
        samples.append((k, s))
        best = max(best, s)
        running.append(best)
    strictly = all(a < b for a, b in zip(running, running[1:]))
    return DigitSumGrowth(n, p, tuple(samples), tuple(running), strictly)


def stewart_bound(n: int, c: float) -> float:
    """Evaluate log log n / (log log log n + c) - 1 for n > 25 and c > 0.

    Purely a display/diagnostic quantity and the only approximate computation
    in this package; the constant c must be supplied by the caller.
    """
    if n <= 25:
        raise ValueError(f"defined for n > 25, got {n}")
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    return math.log(math.log(n)) / (math.log(math.log(math.log(n))) + c) - 1
