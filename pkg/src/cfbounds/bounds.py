"""Catalogue of approximation thresholds, stored as exact right-hand sides.

Every bound is exposed as the value 1/f(q) that an approximation error
|x - p/q| is compared against, as an exact :class:`RadicalSum`:

    dirichlet    1/q^2
    hurwitz      1/(sqrt(5) q^2)
    vahlen       1/(2 q^2)                      (pair witness)
    borel        1/(sqrt(5) q^2)                (triple witness)
    hancl_nair   1/((sqrt(5) + (4 - 5*sqrt(5) + sqrt(61))/(2 q^2)) q^2)
    nathanson    1/(sqrt(k^2+4) q^2)
    hancl_g      refined_f at k = 1
    refined_f    1/f(q),  f(q) = (q^2 sqrt(k^2+4)/2)(1 + sqrt(1 + 4/((k^2+4) q^2)))

For refined_f the reciprocal collapses to the two-radical form

    1/f(q) = (sqrt((k^2+4) q^2 + 4) - q sqrt(k^2+4)) / (2 q),

verified symbolically against f(q) in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact import RadicalSum, radical_sign

__all__ = [
    "BOUND_KINDS",
    "BoundSpec",
    "Outcome",
    "bound_rhs",
    "f_value",
    "satisfies",
    "default_strictness",
    "outcome_holds",
    "monotone_refinement_check",
]

BOUND_KINDS = (
    "dirichlet",
    "hurwitz",
    "hancl_g",
    "vahlen",
    "borel",
    "hancl_nair",
    "nathanson",
    "refined_f",
)

_NEEDS_K = frozenset({"nathanson", "refined_f"})


class Outcome(str, Enum):
    HOLDS_STRICT = "Holds_Strict"
    HOLDS_EQUAL = "Holds_Equal"
    FAILS = "Fails"


@dataclass(frozen=True)
class BoundSpec:
    kind: str
    k: int | None = None

    def __post_init__(self):
        if self.kind not in BOUND_KINDS:
            raise ValueError(f"unknown bound kind {self.kind!r}")
        if self.kind in _NEEDS_K:
            if self.k is None or self.k < 1:
                raise ValueError(f"bound {self.kind!r} requires k >= 1")


def f_value(k: int, q: int) -> RadicalSum:
    """f(q) = (q/2)(q sqrt(k^2+4) + sqrt((k^2+4) q^2 + 4)), exactly."""
    d = k * k + 4
    return RadicalSum(0, [(Fraction(q * q, 2), d), (Fraction(q, 2), d * q * q + 4)])


def _refined_rhs(k: int, q: int) -> RadicalSum:
    d = k * k + 4
    return RadicalSum(
        0, [(Fraction(1, 2 * q), d * q * q + 4), (Fraction(-1, 2), d)]
    )


def bound_rhs(spec: BoundSpec, q: int) -> RadicalSum:
    """The exact threshold to compare |x - p/q| against."""
    if q < 1:
        raise ValueError("q must be >= 1")
    kind = spec.kind
    if kind == "dirichlet":
        return RadicalSum(Fraction(1, q * q))
    if kind in ("hurwitz", "borel"):
        return RadicalSum(0, [(Fraction(1, 5 * q * q), 5)])
    if kind == "vahlen":
        return RadicalSum(Fraction(1, 2 * q * q))
    if kind == "hancl_g":
        return _refined_rhs(1, q)
    if kind == "nathanson":
        d = spec.k * spec.k + 4
        return RadicalSum(0, [(Fraction(1, d * q * q), d)])
    if kind == "refined_f":
        return _refined_rhs(spec.k, q)
    # hancl_nair: q^2 * (sqrt5 + (4 - 5 sqrt5 + sqrt61)/(2 q^2)) doubled
    den = RadicalSum(4, [(2 * q * q - 5, 5), (1, 61)])
    return den.inverse() * 2


def default_strictness(kind: str) -> str:
    """refined_f is a "<=" bound; every classical bound is strict."""
    return "non_strict" if kind == "refined_f" else "strict"


def satisfies(
    err: RadicalSum, spec: BoundSpec, q: int, strictness: str | None = None
) -> Outcome:
    """Exact trichotomy of err against the bound's right-hand side."""
    if strictness not in (None, "strict", "non_strict"):
        raise ValueError(f"unknown strictness {strictness!r}")
    s = radical_sign(err - bound_rhs(spec, q))
    if s < 0:
        return Outcome.HOLDS_STRICT
    if s == 0:
        return Outcome.HOLDS_EQUAL
    return Outcome.FAILS


def outcome_holds(outcome: Outcome, strictness: str) -> bool:
    if outcome is Outcome.HOLDS_STRICT:
        return True
    return outcome is Outcome.HOLDS_EQUAL and strictness == "non_strict"


def monotone_refinement_check(k: int, q: int) -> bool:
    """Exactly checks q^2 sqrt(k^2+4) < f(q) < q^2 sqrt(k^2+4) + 1/sqrt(k^2+4)."""
    if k < 1 or q < 1:
        raise ValueError("k and q must be >= 1")
    d = k * k + 4
    f = f_value(k, q)
    lower = RadicalSum(0, [(q * q, d)])
    upper = lower + RadicalSum(0, [(Fraction(1, d), d)])
    return radical_sign(f - lower) > 0 and radical_sign(upper - f) > 0
