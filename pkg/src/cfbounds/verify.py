"""Theorem-verification harness.

Scans convergents against bounds with exact outcomes, classifies the
equality attainers, decides membership in F(k) (partial quotients all
<= k) and tail-equivalence, and certifies the individual inequalities
used in the proof of the refined bound as exact sign checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from . import _backend as backend
from .bounds import BoundSpec, Outcome, bound_rhs
from .cf import (
    CFExpansion,
    alpha1,
    cf_value,
    convergents,
    expand_rational,
    expand_surd,
    _purely_periodic_value,
)
from .exact import MixedFieldError, QuadSurd, RadicalSum, radical_sign

__all__ = [
    "NumberInput",
    "VerificationRecord",
    "LemmaInstance",
    "LEMMA_IDS",
    "coerce_number",
    "verify_bound_scan",
    "is_in_F",
    "equivalent",
    "nathanson_applicable",
    "is_integer_translate",
    "classify_equality",
    "check_lemma",
    "f_monotone_check",
    "classical_window_check",
]

NumberInput = Union[int, Fraction, QuadSurd, CFExpansion]


@dataclass(frozen=True)
class VerificationRecord:
    n: int
    p: int
    q: int
    outcome: Outcome
    margin_sign: int
    margin: RadicalSum

    def __post_init__(self):
        if (self.margin_sign == 0) != (self.outcome is Outcome.HOLDS_EQUAL):
            raise ValueError("outcome and margin_sign are inconsistent")


def coerce_number(x: NumberInput) -> tuple[Union[Fraction, QuadSurd], CFExpansion]:
    """Exact value and canonical expansion for any accepted input form."""
    if isinstance(x, CFExpansion):
        return cf_value(x), x
    if isinstance(x, QuadSurd):
        if x.is_rational:
            f = x.as_fraction()
            return f, expand_rational(f)
        return x, expand_surd(x)
    f = Fraction(x)
    return f, expand_rational(f)


def _error_term(value: Union[Fraction, QuadSurd], p: int, q: int) -> RadicalSum:
    if isinstance(value, Fraction):
        return RadicalSum(abs(value - Fraction(p, q)))
    err = value.to_radical() - Fraction(p, q)
    return -err if err.sign() < 0 else err


def verify_bound_scan(
    x: NumberInput, spec: BoundSpec, n_max: int
) -> list[VerificationRecord]:
    """Exact outcome of |x - p_n/q_n| against the bound for n = 0..n_max."""
    value, cf = coerce_number(x)
    records = []
    for conv in convergents(cf, n_max):
        err = _error_term(value, conv.p, conv.q)
        margin = err - bound_rhs(spec, conv.q)
        s = radical_sign(margin)
        outcome = (
            Outcome.HOLDS_STRICT if s < 0 else Outcome.HOLDS_EQUAL if s == 0 else Outcome.FAILS
        )
        records.append(VerificationRecord(conv.n, conv.p, conv.q, outcome, s, margin))
    return records


# ---------------------------------------------------------------------------
# membership / equivalence


def is_in_F(x: NumberInput, k: int) -> bool:
    """x in [0, 1] with every partial quotient <= k."""
    if k < 0:
        raise ValueError("k must be >= 0")
    value, cf = coerce_number(x)
    if isinstance(value, Fraction):
        if value < 0 or value > 1:
            return False
    elif value < 0 or value > 1:
        return False
    digits = [cf.a0, *cf.head, *(cf.period or ())]
    return all(a <= k for a in digits)


def _period_of(x: NumberInput) -> Optional[tuple[int, ...]]:
    _, cf = coerce_number(x)
    return cf.period


def equivalent(x: NumberInput, y: NumberInput) -> bool:
    """Tail coincidence: rotated minimal periods equal; rationals are all
    pairwise equivalent (their tails terminate the same way)."""
    px, py = _period_of(x), _period_of(y)
    if px is None and py is None:
        return True
    if px is None or py is None:
        return False
    if len(px) != len(py):
        return False
    doubled = px + px
    return any(doubled[i : i + len(py)] == py for i in range(len(px)))


def nathanson_applicable(x: NumberInput, k: int) -> bool:
    """True iff infinitely many partial quotients of x are >= k.

    For k = 1 every irrational qualifies; for eventually periodic x this
    is "some period element >= k", equivalently x is not equivalent to an
    element of F(k-1).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    period = _period_of(x)
    if period is None:
        raise ValueError("x must be irrational")
    if k == 1:
        return True
    return any(a >= k for a in period)


def is_integer_translate(x: QuadSurd, y: QuadSurd) -> bool:
    """True iff x = y + t for some integer t."""
    try:
        diff = x - y
    except MixedFieldError:
        return False
    return diff.is_rational and diff.as_fraction().denominator == 1


def classify_equality(x: QuadSurd, k: int) -> str:
    """Which extremal family (if any) x is an integer translate of."""
    from .cf import alpha2  # local: avoids polluting module surface

    if is_integer_translate(x, alpha1(k)):
        return "alpha1"
    if is_integer_translate(x, alpha2(k)):
        return "alpha2"
    return "none"


# ---------------------------------------------------------------------------
# proof-case certificates


LEMMA_IDS = (
    "L0_limit",
    "L1_case1",
    "L2_caseH",
    "L3_odd_block",
    "L4_AB_margin",
    "R1",
    "R2",
    "R3",
    "R4",
    "R5",
)

_LEMMA_MIN_K = {"R2": 3, "R3": 2, "R4": 2, "R5": 2}


@dataclass
class LemmaInstance:
    lemma_id: str
    k: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.lemma_id not in LEMMA_IDS:
            raise ValueError(f"unknown lemma {self.lemma_id!r}")
        if self.k < _LEMMA_MIN_K.get(self.lemma_id, 1):
            raise ValueError(
                f"{self.lemma_id} requires k >= {_LEMMA_MIN_K.get(self.lemma_id, 1)}"
            )


def _sqrt_d(k: int) -> RadicalSum:
    return RadicalSum.sqrt(k * k + 4)


def _starred_q(k: int, j: int) -> tuple[int, int]:
    """(q*_j, q*_{j-1}) for the convergents of [0; (k)]."""
    if j < 1:
        raise ValueError("depth must be >= 1")
    pairs = backend.convergent_pairs([0] + [k] * j, j + 1)
    return pairs[j][1], pairs[j - 1][1]


def check_lemma(inst: LemmaInstance) -> tuple[bool, RadicalSum]:
    """Exact sign certificate for one proof-case inequality.

    Returns (holds, margin) where margin is the exact left-minus-right
    difference (scaled only by manifestly positive quantities).
    """
    k = inst.k
    d = k * k + 4
    sq = _sqrt_d(k)

    if inst.lemma_id == "L0_limit":
        # f(q) < q^2 sqrt(d) + 1/sqrt(d): the sqrt(1+x) < 1 + x/2 shortcut
        from .bounds import f_value

        q = int(inst.params.get("q", 1))
        margin = RadicalSum(0, [(q * q, d), (Fraction(1, d), d)]) - f_value(k, q)
    elif inst.lemma_id == "L1_case1":
        # k + 2 > sqrt(d) + 1/sqrt(d)
        margin = RadicalSum(k + 2) - RadicalSum(0, [(1, d), (Fraction(1, d), d)])
    elif inst.lemma_id == "L2_caseH":
        # k + 1 + 2*[0;(k+1,1)] = (k^2 + k + sqrt(k^2+6k+5))/(k+1) > sqrt(d)
        t = 1 / _purely_periodic_value((k + 1, 1))
        v = t * 2 + (k + 1)
        closed = QuadSurd.make(k * k + k, 1, k + 1, k * k + 6 * k + 5)
        if (v - closed).sign() != 0:
            raise ArithmeticError("closed form for the limit of H does not match")
        margin = v.to_radical() - sq
    elif inst.lemma_id == "L3_odd_block":
        # k + [0; k-1, k+1] + [0;(k)] = (k^3 + 2k + 2 + k^2 sqrt(d))/(2k^2) > sqrt(d)
        v = alpha1(k) + Fraction(k) + Fraction(k + 1, k * k)
        closed = QuadSurd.make(k**3 + 2 * k + 2, k * k, 2 * k * k, d)
        if (v - closed).sign() != 0:
            raise ArithmeticError("closed form for the odd-block limit does not match")
        margin = v.to_radical() - sq
    elif inst.lemma_id == "L4_AB_margin":
        # (1/k^2 + 1/(k + 1/k)^2) / (s + sqrt(d)) = s - sqrt(d) > 0
        # for s = k + 1/k + 1/(k + 1/k)
        s = Fraction(k) + Fraction(1, k) + 1 / (Fraction(k) + Fraction(1, k))
        num = Fraction(1, k * k) + 1 / (Fraction(k) + Fraction(1, k)) ** 2
        displayed = RadicalSum(num) * (RadicalSum(s) + sq).inverse()
        margin = RadicalSum(s) - sq
        if (displayed - margin).sign() != 0:
            raise ArithmeticError("pre-squared margin display does not match")
        for name in ("A", "B"):
            if name in inst.params:
                b = Fraction(inst.params[name])
                lo = Fraction(1, k)
                if not (b + 1 / (k + b)) > (lo + 1 / (k + lo)):
                    return False, margin
    else:
        # final reduction cases: displayed ratio > 1/sqrt(d), with starred
        # convergent denominators taken from [0;(k)]
        depth = int(inst.params.get("depth", 1))
        q1, q0 = inst.params.get("qstar") or _starred_q(k, depth)
        factor, weight = {
            "R1": (RadicalSum(k + 2, [(-1, d)]), (k + 1) * q1 + q0),
            "R2": (RadicalSum(2 - k, [(1, d)]), q1 + q0),
            "R3": (RadicalSum(2 - k, [(1, d)]), (k - 1) * q1 + q0),
            "R4": (RadicalSum(1 - k, [(1, d)]), (2 * k - 1) * q1 + 2 * q0),
            "R5": (RadicalSum(-k, [(1, d)]), (2 * k - 1) * q1 + 2 * q0),
        }[inst.lemma_id]
        x = factor * weight
        y = RadicalSum(k * q1 + 2 * q0, [(q1, d)])
        margin = x * y.inverse() - RadicalSum(0, [(Fraction(1, d), d)])

    return radical_sign(margin) > 0, margin


def f_monotone_check(k: int, samples: int) -> bool:
    """Grid certificate that B + 1/(k+B) increases on (1/k, k+1]."""
    if k < 1 or samples < 1:
        raise ValueError("k and samples must be >= 1")
    lo = Fraction(1, k)
    step = (Fraction(k + 1) - lo) / samples
    floor_val = lo + 1 / (k + lo)
    prev = None
    for i in range(1, samples + 1):
        b = lo + i * step
        v = b + 1 / (k + b)
        if v <= floor_val or (prev is not None and v <= prev):
            return False
        prev = v
    return True


_WINDOW_RULES = {
    "vahlen_pairs": (BoundSpec("vahlen"), 2),
    "borel_triples": (BoundSpec("borel"), 3),
    "hancl_nair_triples": (BoundSpec("hancl_nair"), 3),
}


def classical_window_check(x: NumberInput, rule: str, n_max: int) -> bool:
    """Every window of consecutive convergents contains a strict witness."""
    if rule not in _WINDOW_RULES:
        raise ValueError(f"unknown rule {rule!r}")
    spec, width = _WINDOW_RULES[rule]
    value, cf = coerce_number(x)
    if cf.is_finite:
        raise ValueError("rule requires an irrational input")
    hits = []
    for conv in convergents(cf, n_max):
        err = _error_term(value, conv.p, conv.q)
        hits.append(radical_sign(err - bound_rhs(spec, conv.q)) < 0)
    return all(
        any(hits[i : i + width]) for i in range(0, n_max - width + 2)
    )
