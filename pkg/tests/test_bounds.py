"""Unit tests for the approximation-bound right-hand sides."""
from fractions import Fraction

import mpmath
import pytest

from cfbounds.bounds import (
    BOUND_KINDS,
    BoundSpec,
    Outcome,
    bound_rhs,
    default_strictness,
    f_value,
    monotone_refinement_check,
    outcome_holds,
    satisfies,
)
from cfbounds.bounds import _refined_rhs
from cfbounds.exact import RadicalSum, radical_sign

mpmath.mp.dps = 200


def _as_mp(r: RadicalSum) -> mpmath.mpf:
    total = mpmath.mpf(r.c0.numerator) / r.c0.denominator
    for coeff, rad in r.terms:
        total += mpmath.mpf(coeff.numerator) / coeff.denominator * mpmath.sqrt(rad)
    return total


def _oracle_rhs(kind: str, k, q) -> mpmath.mpf:
    sq5 = mpmath.sqrt(5)
    if kind == "dirichlet":
        return mpmath.mpf(1) / q**2
    if kind == "hurwitz":
        return 1 / (sq5 * q**2)
    if kind == "hancl_g":
        return 1 / (q**2 * sq5 / 2 * (1 + mpmath.sqrt(1 + 4 / (5 * mpmath.mpf(q) ** 2))))
    if kind == "vahlen":
        return 1 / (2 * mpmath.mpf(q) ** 2)
    if kind == "borel":
        return 1 / (sq5 * q**2)
    if kind == "hancl_nair":
        return 1 / ((sq5 + (4 - 5 * sq5 + mpmath.sqrt(61)) / (2 * q**2)) * q**2)
    d = mpmath.sqrt(k * k + 4)
    if kind == "nathanson":
        return 1 / (d * q**2)
    # refined: 1/f(q) with f(q) = (q/2)(q sqrt(k^2+4) + sqrt((k^2+4)q^2+4))
    return 1 / (mpmath.mpf(q) / 2 * (q * d + mpmath.sqrt((k * k + 4) * q**2 + 4)))


@pytest.mark.parametrize("kind", BOUND_KINDS)
@pytest.mark.parametrize("q", [1, 2, 7, 100])
def test_bound_rhs_matches_oracle(kind, q):
    k = 3 if kind in ("nathanson", "refined_f") else None
    rhs = bound_rhs(BoundSpec(kind, k), q)
    assert abs(_as_mp(rhs) - _oracle_rhs(kind, k, q)) < mpmath.mpf(10) ** -150


@pytest.mark.parametrize("k", range(1, 11))
@pytest.mark.parametrize("q", [1, 2, 3, 10, 100, 10**6])
def test_refined_is_strictly_below_nathanson(k, q):
    diff = bound_rhs(BoundSpec("refined_f", k), q) - bound_rhs(BoundSpec("nathanson", k), q)
    assert radical_sign(diff) < 0


@pytest.mark.parametrize("k", [1, 2, 5, 10])
@pytest.mark.parametrize("q", [1, 3, 50])
def test_reciprocal_simplification_is_exact(k, q):
    product = f_value(k, q) * _refined_rhs(k, q)
    assert (product - 1).sign() == 0
    assert (bound_rhs(BoundSpec("refined_f", k), q) - _refined_rhs(k, q)).sign() == 0


@pytest.mark.parametrize("k", [1, 3, 10])
@pytest.mark.parametrize("q", [1, 2, 100, 1000])
def test_f_between_its_bracketing_values(k, q):
    assert monotone_refinement_check(k, q)


def test_requires_k_for_parametric_bounds():
    with pytest.raises(ValueError):
        BoundSpec("refined_f")
    with pytest.raises(ValueError):
        BoundSpec("nathanson", 0)


def test_default_strictness():
    assert default_strictness("refined_f") == "non_strict"
    for kind in BOUND_KINDS:
        if kind != "refined_f":
            assert default_strictness(kind) == "strict"


def test_satisfies_trichotomy():
    spec = BoundSpec("refined_f", 1)
    rhs = bound_rhs(spec, 1)
    below = rhs * Fraction(1, 2)
    assert satisfies(below, spec, 1) is Outcome.HOLDS_STRICT
    assert satisfies(rhs, spec, 1) is Outcome.HOLDS_EQUAL
    assert satisfies(rhs * 2, spec, 1) is Outcome.FAILS


def test_outcome_holds_depends_on_strictness():
    assert outcome_holds(Outcome.HOLDS_EQUAL, "non_strict")
    assert not outcome_holds(Outcome.HOLDS_EQUAL, "strict")
    assert outcome_holds(Outcome.HOLDS_STRICT, "strict")
    assert not outcome_holds(Outcome.FAILS, "non_strict")
