"""Unit tests for the exact-arithmetic layer."""
import random
from fractions import Fraction
from math import isqrt

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cfbounds.exact import (
    MixedFieldError,
    QuadSurd,
    RadicalSum,
    radical_sign,
    square_free_split,
)
from conftest import make_random_surd

mpmath.mp.dps = 200


def _as_mp(r: RadicalSum) -> mpmath.mpf:
    total = mpmath.mpf(r.c0.numerator) / r.c0.denominator
    for coeff, rad in r.terms:
        total += mpmath.mpf(coeff.numerator) / coeff.denominator * mpmath.sqrt(rad)
    return total


# ---------------------------------------------------------------------------
# square-free kernels


@pytest.mark.parametrize(
    "n, expected",
    [(1, (1, 1)), (2, (1, 2)), (12, (2, 3)), (49, (7, 1)), (50, (5, 2)), (720, (12, 5))],
)
def test_square_free_split_known(n, expected):
    assert square_free_split(n) == expected


@given(st.integers(min_value=1, max_value=10**12))
def test_square_free_split_reconstructs(n):
    f, s = square_free_split(n)
    assert s * f * f == n
    # no small square divides the kernel
    assert all(s % (p * p) for p in (2, 3, 5, 7, 11, 13))


# ---------------------------------------------------------------------------
# RadicalSum


def test_same_radicand_terms_merge():
    r = RadicalSum(0, [(1, 8), (3, 2)])  # sqrt(8) = 2 sqrt(2)
    assert r.terms == ((Fraction(5), 2),)


def test_perfect_square_radicand_folds_into_rational():
    r = RadicalSum(1, [(2, 49)])
    assert r.terms == () and r.c0 == 15


@pytest.mark.parametrize(
    "r, expected_sign",
    [
        (RadicalSum(0, [(1, 2), (1, 3)]) - RadicalSum(0, [(1, 5)]), 1),
        (RadicalSum(0, [(1, 8), (-2, 2)]), 0),
        (RadicalSum(0, [(1, 12), (1, 27), (-5, 3)]), 0),
        (RadicalSum(3, [(Fraction(-6, 5), 5)]), 1),  # 3 - (6/5) sqrt 5
        (RadicalSum(0, [(1, 2)]) - Fraction(141422, 100000), -1),
        (RadicalSum(0, [(1, 10**18 + 9)]) - 10**9, 1),
    ],
)
def test_radical_sign_known(r, expected_sign):
    assert radical_sign(r) == expected_sign
    assert r.sign() == expected_sign


def test_product_difference_of_squares_is_structural_zero():
    x = RadicalSum(0, [(1, 7), (1, 11)])
    y = RadicalSum(0, [(1, 7), (-1, 11)])
    assert (x * y + 4).sign() == 0  # (sqrt7 + sqrt11)(sqrt7 - sqrt11) = -4


def test_inverse_round_trip():
    r = RadicalSum(Fraction(3, 7), [(2, 5), (Fraction(-1, 3), 13)])
    assert (r * r.inverse() - 1).sign() == 0


def test_decimal_matches_oracle():
    r = RadicalSum(Fraction(-2, 3), [(1, 2), (5, 7)])
    got = mpmath.mpf(r.decimal(50))
    assert abs(got - _as_mp(r)) < mpmath.mpf(10) ** -45


def test_decimal_of_zero():
    assert (RadicalSum(0, [(1, 18), (-3, 2)])).decimal(50) == "0"


@settings(max_examples=200)
@given(
    st.fractions(min_value=-100, max_value=100),
    st.lists(
        st.tuples(
            st.fractions(min_value=-20, max_value=20),
            st.integers(min_value=2, max_value=500),
        ),
        max_size=3,
    ),
)
def test_radical_sign_matches_oracle(c0, terms):
    r = RadicalSum(c0, terms)
    approx = _as_mp(r)
    if abs(approx) < mpmath.mpf(10) ** -100:
        assert r.sign() == 0
    else:
        assert r.sign() == (1 if approx > 0 else -1)


# ---------------------------------------------------------------------------
# QuadSurd


def test_make_normalizes_canonical_form():
    x = QuadSurd.make(-2, 1, 2, 8)  # (-2 + 2 sqrt 2)/2 = -1 + sqrt 2
    assert (x.a, x.b, x.c, x.d) == (-1, 1, 1, 2)


def test_make_rejects_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        QuadSurd.make(1, 1, 0, 2)


def test_rational_surd_folds_to_d_one():
    x = QuadSurd.make(3, 2, 6, 25)  # (3 + 2*5)/6
    assert x.is_rational and x.as_fraction() == Fraction(13, 6)


def test_mixed_field_arithmetic_raises():
    with pytest.raises(MixedFieldError):
        QuadSurd.make(0, 1, 1, 2) + QuadSurd.make(0, 1, 1, 3)


def test_floor_against_oracle(rng):
    for _ in range(300):
        x = make_random_surd(rng)
        mp_val = (mpmath.mpf(x.a) + x.b * mpmath.sqrt(x.d)) / x.c
        assert x.floor() == int(mpmath.floor(mp_val))


def test_field_axioms(rng):
    for _ in range(100):
        d = rng.choice([2, 3, 5, 7, 13])
        x = QuadSurd.make(rng.randint(-9, 9), rng.randint(1, 9), rng.randint(1, 9), d)
        y = QuadSurd.make(rng.randint(-9, 9), rng.randint(-9, 9), rng.randint(1, 9), d)
        assert ((x + y) - y - x).sign() == 0
        if y.sign() != 0:
            assert (x / y * y - x).sign() == 0
        assert ((x * y).conjugate() - x.conjugate() * y.conjugate()).sign() == 0


def test_pow_matches_repeated_multiplication():
    x = QuadSurd.make(1, 1, 2, 5)
    acc = QuadSurd.make(1, 0, 1, 5)
    for n in range(6):
        assert (x**n - acc).sign() == 0
        acc = acc * x


def test_comparisons_are_exact():
    golden = QuadSurd.make(1, 1, 2, 5)
    assert golden > Fraction(161803, 100000)
    assert golden < Fraction(161804, 100000)
    assert not golden == Fraction(161803, 100000)
