"""Tests for exact Bernoulli tables, polynomials, and the two denominator routes."""

from fractions import Fraction

import pytest

from berndenom.arith import INFINITY, frac_sum, primes_up_to
from berndenom.bernoulli import (
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

# Frozen from an independent computer-algebra run (exact rational polynomials,
# lcm of coefficient denominators), n = 1..40.
DENOM_NO_CONST_1_40 = [
    1, 1, 2, 1, 6, 2, 6, 3, 10, 2,
    6, 2, 210, 30, 6, 3, 30, 10, 210, 42,
    330, 30, 30, 30, 546, 42, 14, 2, 30, 2,
    462, 231, 3570, 210, 6, 2, 51870, 2730, 210, 42,
]

# Frozen from the same independent run, with the minus-half convention pinned.
BERNOULLI_0_20 = [
    "1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0",
    "5/66", "0", "-691/2730", "0", "7/6", "0", "-3617/510", "0",
    "43867/798", "0", "-174611/330",
]

CLAUSEN_2_40 = {
    2: 6, 4: 30, 6: 42, 8: 30, 10: 66, 12: 2730, 14: 6, 16: 510, 18: 798,
    20: 330, 22: 138, 24: 2730, 26: 6, 28: 870, 30: 14322, 32: 510, 34: 6,
    36: 1919190, 38: 6, 40: 13530,
}


# --- the number table --------------------------------------------------------


def test_bernoulli_numbers_match_frozen_table():
    assert [str(b) for b in bernoulli_numbers(20)] == BERNOULLI_0_20


def test_bernoulli_table_invariants():
    table = bernoulli_numbers(101)
    assert table[0] == 1
    assert table[1] == Fraction(-1, 2)
    for n in range(3, 102, 2):
        assert table[n] == 0
    for n in range(2, 102, 2):
        assert table[n].denominator == clausen_denominator(n)


def test_bernoulli_cap_refuses_large_requests():
    with pytest.raises(ValueError):
        bernoulli_numbers(10, cap=5)
    with pytest.raises(ValueError):
        bernoulli_numbers(5001)
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    assert bernoulli_number(10, cap=10) == Fraction(5, 66)


def test_von_staudt_clausen_integrality():
    for n in range(2, 121, 2):
        total = bernoulli_number(n) + sum(
            Fraction(1, p) for p in primes_up_to(n + 1) if n % (p - 1) == 0
        )
        assert total.denominator == 1


def test_clausen_examples_and_domain():
    assert clausen_denominator(2) == 6
    assert clausen_denominator(4) == 30
    assert clausen_denominator(12) == 2730
    for n, d in CLAUSEN_2_40.items():
        assert clausen_denominator(n) == d
    with pytest.raises(ValueError):
        clausen_denominator(3)
    with pytest.raises(ValueError):
        clausen_denominator(0)


# --- polynomials --------------------------------------------------------------


def test_bernoulli_poly_examples():
    assert bernoulli_poly(0).coeffs == (Fraction(1),)
    assert bernoulli_poly(1).coeffs == (Fraction(-1, 2), Fraction(1))
    assert bernoulli_poly(3).coeffs == (
        Fraction(0),
        Fraction(1, 2),
        Fraction(-3, 2),
        Fraction(1),
    )


def test_bernoulli_poly_shape():
    for n in range(41):
        f = bernoulli_poly(n)
        assert f.degree == n
        assert f.coeffs[-1] == 1


def test_no_constant_examples():
    assert bernoulli_poly_no_constant(1).coeffs == (Fraction(0), Fraction(1))
    assert bernoulli_poly_no_constant(2).coeffs == (
        Fraction(0),
        Fraction(-1),
        Fraction(1),
    )
    assert bernoulli_poly_no_constant(4).coeffs == (
        Fraction(0),
        Fraction(0),
        Fraction(1),
        Fraction(-2),
        Fraction(1),
    )
    with pytest.raises(ValueError):
        bernoulli_poly_no_constant(0)


def test_no_constant_drops_exactly_the_constant():
    for n in range(1, 41):
        full = bernoulli_poly(n)
        bare = bernoulli_poly_no_constant(n)
        assert bare.coefficient(0) == 0
        assert bare.coeffs[1:] == full.coeffs[1:]
        assert bare.degree == n


def test_poly_denominator_examples():
    assert poly_denominator(bernoulli_poly_no_constant(3)) == 2
    assert poly_denominator(bernoulli_poly_no_constant(5)) == 6
    assert poly_denominator(RationalPolynomial(())) == 1


def test_rational_polynomial_normalization():
    f = RationalPolynomial.from_coeffs([Fraction(1, 2), 3, 0, 0])
    assert f.degree == 1
    assert f.coefficient(5) == 0
    zero = RationalPolynomial.from_coeffs([0, 0])
    assert zero.is_zero and zero.degree == -1


# --- valuations of polynomials -------------------------------------------------


def test_ord_rational():
    assert ord_rational(Fraction(3, 4), 2) == -2
    assert ord_rational(Fraction(9, 5), 3) == 2
    assert ord_rational(Fraction(0), 7) is INFINITY


def test_ord_poly_examples():
    assert ord_poly(bernoulli_poly_no_constant(3), 2) == -1
    for p in primes_up_to(13):
        assert ord_poly(bernoulli_poly_no_constant(2), p) == 0
    assert ord_poly(RationalPolynomial(()), 5) is INFINITY


def test_p_part_structure():
    nine_five = bernoulli_poly_p_part(9, 5)
    assert {j for j, c in enumerate(nine_five.coeffs) if c} == {1, 5}
    nine_two = bernoulli_poly_p_part(9, 2)
    assert {j for j, c in enumerate(nine_two.coeffs) if c} == {1, 3, 5, 7}
    for n in (3, 4, 9):
        for p in primes_up_to(40):
            if p > n:
                assert bernoulli_poly_p_part(n, p).is_zero
    with pytest.raises(ValueError):
        bernoulli_poly_p_part(2, 3)


def test_poly_valuation_invariants_full_range():
    # one pass over n and p checks: the coefficient-minimum valuation of the
    # constant-free polynomial is min(0, ord(n/2), ord of the p-part); the
    # p-part valuation is -1 exactly when the fractional-part sum exceeds 1;
    # and the overall valuation stays in {-1, 0} (squarefree denominator)
    for n in range(3, 301):
        bare = bernoulli_poly_no_constant(n)
        half = Fraction(n, 2)
        for p in primes_up_to(n + 1):
            part = bernoulli_poly_p_part(n, p)
            v_part = ord_poly(part, p)
            v_bare = ord_poly(bare, p)
            assert v_bare == min(0, ord_rational(half, p), v_part)
            if frac_sum(n, p) > 1:
                assert v_part == -1
            else:
                assert v_part >= 0
            assert v_bare == 0 or v_bare == -1


def test_p_part_two_adic_valuation_for_odd_n():
    for n in range(3, 200, 2):
        assert ord_poly(bernoulli_poly_p_part(n, 2), 2) == -1


# --- the denominator formula ----------------------------------------------------


def test_denom_formula_examples():
    assert denom_formula(1).product == 1
    assert denom_formula(3).primes == (2,)
    assert denom_formula(3).product == 2
    assert denom_formula(5).product == 6
    assert denom_formula(9).primes == (2, 5)
    assert denom_formula(9).product == 10
    with pytest.raises(ValueError):
        denom_formula(0)


def test_denom_formula_matches_frozen_oracle():
    for n, expected in enumerate(DENOM_NO_CONST_1_40, start=1):
        assert denom_formula(n).product == expected


def test_brute_force_matches_frozen_oracle():
    for n, expected in enumerate(DENOM_NO_CONST_1_40, start=1):
        assert poly_denominator(bernoulli_poly_no_constant(n)) == expected


def test_search_bound_is_lossless():
    # widening the prime search beyond (n+1)/lambda_n must change nothing
    for n in range(1, 121):
        narrow = denom_formula(n)
        wide = denom_formula(n, search_bound=n)
        assert narrow.primes == wide.primes
        assert all(p <= prime_search_bound(n) for p in narrow.primes)


def test_prime_search_bound():
    assert prime_search_bound(9) == 5
    assert prime_search_bound(8) == 3
    with pytest.raises(ValueError):
        prime_search_bound(0)


def test_denominator_has_prime_matches_formula():
    for n in range(1, 201):
        members = set(denom_formula(n).primes)
        for p in (2, 3, 5, 7, 11, 13):
            assert denominator_has_prime(n, p) == (p in members)
    with pytest.raises(ValueError):
        denominator_has_prime(10, 4)
