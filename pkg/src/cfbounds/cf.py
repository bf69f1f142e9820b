"""Continued-fraction engine.

Expansion of rationals (Euclidean loop) and quadratic surds (period
detection on the reduced (P, Q) state), convergents by the standard
recurrences, exact tail values, the error identity

    |x - p_n/q_n| = 1 / (q_n^2 * ([a_{n+1}; a_{n+2}, ...] + [0; a_n, ..., a_1]))

checked against the direct difference, and the two extremal families

    alpha1(k) = (sqrt(k^2+4) - k)/2     = [0; (k)]
    alpha2(k) = (k + 2 - sqrt(k^2+4))/2 = [0; 1, k-1, (k)]   (k >= 2)

with their closed-form convergents.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import _backend as backend
from .exact import QuadSurd, RadicalSum

__all__ = [
    "CFExpansion",
    "Convergent",
    "IdentityMismatch",
    "expand_rational",
    "expand_surd",
    "convergents",
    "tail_value",
    "reversed_tail",
    "error_identity",
    "cf_value",
    "alpha1",
    "alpha2",
    "closed_form_pq",
]


class IdentityMismatch(RuntimeError):
    """Two exact computations of the same quantity disagreed."""


@dataclass(frozen=True)
class CFExpansion:
    """Canonical simple continued fraction [a0; head..., (period...)].

    ``period`` is None for finite (rational) expansions.  Finite expansions
    of length >= 2 never end in 1; periodic ones carry the minimal period
    and the shortest pre-period head.
    """

    a0: int
    head: tuple[int, ...] = ()
    period: tuple[int, ...] | None = None

    def __post_init__(self):
        if any(a < 1 for a in self.head):
            raise ValueError("partial quotients after a0 must be >= 1")
        if self.period is not None:
            if not self.period:
                raise ValueError("period must be nonempty")
            if any(a < 1 for a in self.period):
                raise ValueError("partial quotients in period must be >= 1")
        elif self.head and self.head[-1] == 1:
            raise ValueError("finite expansion must not end in 1")

    @property
    def is_finite(self) -> bool:
        return self.period is None

    def __len__(self) -> int:
        """Number of digits of a finite expansion."""
        if not self.is_finite:
            raise ValueError("infinite expansion")
        return 1 + len(self.head)

    def digit(self, i: int) -> int:
        if i < 0:
            raise IndexError("digit index must be >= 0")
        if i == 0:
            return self.a0
        if i <= len(self.head):
            return self.head[i - 1]
        if self.period is None:
            raise IndexError(f"finite expansion has {1 + len(self.head)} digits")
        return self.period[(i - len(self.head) - 1) % len(self.period)]

    def digits(self, count: int) -> list[int]:
        return [self.digit(i) for i in range(count)]

    def render(self) -> str:
        parts = ",".join(str(a) for a in self.head)
        if self.period is not None:
            per = "(" + ",".join(str(a) for a in self.period) + ")"
            parts = parts + "," + per if parts else per
        if not parts:
            return f"[{self.a0}]"
        return f"[{self.a0};{parts}]"

    def __repr__(self) -> str:
        return f"CFExpansion {self.render()}"


@dataclass(frozen=True)
class Convergent:
    """n-th convergent p/q, indexed so that p0/q0 = a0/1."""

    n: int
    p: int
    q: int

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)


def expand_rational(x: Union[Fraction, int]) -> CFExpansion:
    """Finite expansion of a rational; last digit != 1 when length >= 2."""
    f = Fraction(x)
    digits = backend.rational_cf_digits(f.numerator, f.denominator)
    if len(digits) > 1 and digits[-1] == 1:
        digits.pop()
        digits[-1] += 1
    return CFExpansion(digits[0], tuple(digits[1:]), None)


def _to_pqd(x: QuadSurd) -> tuple[int, int, int]:
    """Rewrite x as (P + sqrt(D))/Q with Q | D - P^2."""
    if x.b > 0:
        p, q, d = x.a, x.c, x.b * x.b * x.d
    else:
        p, q, d = -x.a, -x.c, x.b * x.b * x.d
    if (d - p * p) % q:
        p, d, q = p * abs(q), d * q * q, q * abs(q)
    return p, q, d


def expand_surd(x: QuadSurd) -> CFExpansion:
    """Canonical eventually periodic expansion of a quadratic irrational."""
    if x.is_rational:
        raise ValueError("rational input: use expand_rational")
    a0 = x.floor()
    x1 = 1 / (x - a0)
    p, q, d = _to_pqd(x1)
    stream, cycle_start = backend.periodic_cf_digits(p, q, d)
    head = list(stream[:cycle_start])
    period = list(stream[cycle_start:])
    while head and head[-1] == period[-1]:
        period = [period[-1]] + period[:-1]
        head.pop()
    return CFExpansion(a0, tuple(head), tuple(period))


def convergents(cf: CFExpansion, n: int) -> list[Convergent]:
    """Convergents 0..n (inclusive) by the standard recurrences."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if cf.is_finite and n >= len(cf):
        raise ValueError(f"expansion has only {len(cf)} digits")
    pairs = backend.convergent_pairs(cf.digits(n + 1), n + 1)
    return [Convergent(i, p, q) for i, (p, q) in enumerate(pairs)]


def _purely_periodic_value(digits: tuple[int, ...]) -> QuadSurd:
    """Value of the purely periodic expansion [d0; d1, ..., (repeat)]."""
    # t satisfies t = (A t + B) / (C t + D) for the Moebius product below
    a, b, c, d = 1, 0, 0, 1
    for x in digits:
        a, b, c, d = a * x + b, a, c * x + d, c
    disc = (a - d) * (a - d) + 4 * b * c
    t = QuadSurd.make(a - d, 1, 2 * c, disc)
    if t.is_rational or not t > 1:
        raise IdentityMismatch("periodic tail failed its fixed-point equation")
    return t


def tail_value(cf: CFExpansion, n: int) -> QuadSurd:
    """Exact value of the tail [a_{n+1}; a_{n+2}, ...] (n >= -1)."""
    if cf.is_finite:
        raise ValueError("finite expansion has no irrational tail")
    assert cf.period is not None
    h, length = len(cf.head), len(cf.period)
    j = n + 1
    if j < 0:
        raise ValueError("index must be >= -1")
    if j >= h + 1:
        r = (j - h - 1) % length
        return _purely_periodic_value(cf.period[r:] + cf.period[:r])
    t = _purely_periodic_value(cf.period)
    for i in range(h, j - 1, -1):
        t = cf.digit(i) + 1 / t
    return t


def cf_value(cf: CFExpansion) -> Union[Fraction, QuadSurd]:
    """Exact value of an expansion (Fraction if finite, surd otherwise)."""
    if not cf.is_finite:
        return tail_value(cf, -1)
    v = Fraction(cf.digit(len(cf) - 1))
    for i in range(len(cf) - 2, -1, -1):
        v = cf.digit(i) + 1 / v
    return v


def reversed_tail(cf: CFExpansion, n: int) -> Fraction:
    """Exact value of [0; a_n, a_{n-1}, ..., a_1]; zero when n = 0."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if cf.is_finite and n >= len(cf):
        raise ValueError(f"expansion has only {len(cf)} digits")
    v = Fraction(0)
    for i in range(1, n + 1):
        v = 1 / (cf.digit(i) + v)
    return v


def error_identity(x: QuadSurd, cf: CFExpansion, n: int) -> RadicalSum:
    """|x - p_n/q_n| computed directly and via the tail identity.

    Both routes are evaluated exactly; a mismatch raises
    :class:`IdentityMismatch`.
    """
    conv = convergents(cf, n)[-1]
    direct = x.to_radical() - Fraction(conv.p, conv.q)
    if direct.sign() < 0:
        direct = -direct
    denom = (tail_value(cf, n).to_radical() + reversed_tail(cf, n)) * (conv.q * conv.q)
    via_tail = denom.inverse()
    if (direct - via_tail).sign() != 0:
        raise IdentityMismatch(f"error identity failed at n={n} for {x!r}")
    return direct


def alpha1(k: int) -> QuadSurd:
    """(sqrt(k^2+4) - k)/2, the purely periodic [0; (k)]."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return QuadSurd.make(-k, 1, 2, k * k + 4)


def alpha2(k: int) -> QuadSurd:
    """(k + 2 - sqrt(k^2+4))/2, i.e. [0; 1, k-1, (k)] for k >= 2."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return QuadSurd.make(k + 2, -1, 2, k * k + 4)


def _alpha2_recurrence_pq(k: int, n: int) -> tuple[int, int]:
    # seeds p0=0, q0=q1=p1=1, p2=k-1, q2=k, then the order-2 recurrence
    ps = [0, 1, k - 1]
    qs = [1, 1, k]
    while len(ps) <= n:
        ps.append(k * ps[-1] + ps[-2])
        qs.append(k * qs[-1] + qs[-2])
    return ps[n], qs[n]


def closed_form_pq(k: int, n: int, family: str) -> tuple[int, int]:
    """Closed-form convergent (p_n, q_n) for alpha1(k) or alpha2(k).

    Evaluates the Binet-style displays in Q(sqrt(k^2+4)) -- powers of
    (k + sqrt(k^2+4))/2 and (k - sqrt(k^2+4))/2 -- and checks that the
    irrational parts cancel before returning integers.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if family not in ("alpha1", "alpha2"):
        raise ValueError(f"unknown family {family!r}")
    if family == "alpha2" and k < 2:
        # alpha2(1) = [0;2,(1)] does not follow the [0;1,k-1,(k)] digit
        # pattern the alpha2 closed form encodes
        raise ValueError("alpha2 closed form requires k >= 2")
    dd = k * k + 4
    if family == "alpha1":
        if n < 0:
            raise ValueError("n must be >= 0 for family alpha1")
        e = n
    else:
        if n < 1:
            raise ValueError("n must be >= 1 for family alpha2")
        e = n - 1
    b1 = QuadSurd.make(k, 1, 2, dd) ** e   # 2/(sqrt(dd)-k), raised
    b2 = QuadSurd.make(k, -1, 2, dd) ** e  # -2/(sqrt(dd)+k), raised
    qcoef1 = QuadSurd.make(dd, k, 2 * dd, dd)
    qcoef2 = QuadSurd.make(dd, -k, 2 * dd, dd)
    qv = qcoef1 * b1 + qcoef2 * b2
    if family == "alpha1":
        pv = QuadSurd.make(0, 1, dd, dd) * (b1 - b2)
    else:
        pv = QuadSurd.make(dd, k - 2, 2 * dd, dd) * b1 + QuadSurd.make(
            dd, 2 - k, 2 * dd, dd
        ) * b2
    for v in (pv, qv):
        if not v.is_rational or v.as_fraction().denominator != 1:
            raise IdentityMismatch("closed form did not collapse to an integer")
    return int(pv.as_fraction()), int(qv.as_fraction())
