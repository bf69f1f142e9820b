"""Pure-Python implementations of the hot inner loops.

The compiled twin lives in ``_ckernels.pyx``; :mod:`cfbounds._backend`
picks whichever is importable.  Both must produce bit-identical output.
"""
from __future__ import annotations

from math import isqrt

BACKEND_NAME = "python"


def rational_cf_digits(num: int, den: int) -> list[int]:
    """Continued-fraction digits of num/den (den > 0) via the Euclidean loop.

    Returns the raw digit list; the caller applies the trailing-1 rewrite.
    """
    if den <= 0:
        raise ValueError("denominator must be positive")
    digits = []
    while den:
        a = num // den
        digits.append(a)
        num, den = den, num - a * den
    return digits


def convergent_pairs(digits: list[int], count: int) -> list[tuple[int, int]]:
    """First ``count`` convergents (p_n, q_n) of the given digit list."""
    if count > len(digits):
        raise ValueError("not enough digits for requested convergents")
    out = []
    p0, q0 = 1, 0  # virtual (p_{-1}, q_{-1})
    p1, q1 = 0, 1  # virtual (p_{-2}, q_{-2}) -- standard seed
    for i in range(count):
        a = digits[i]
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
        out.append((p0, q0))
    return out


def periodic_cf_digits(P: int, Q: int, D: int) -> tuple[list[int], int]:
    """Digit stream of (P + sqrt(D))/Q until the state (P, Q) repeats.

    Requires D > 0 not a perfect square and Q | D - P*P.  Returns the
    digits emitted before the first repeated state together with the
    index in that list where the cycle starts.
    """
    s = isqrt(D)
    if s * s == D:
        raise ValueError("D must not be a perfect square")
    seen: dict[tuple[int, int], int] = {}
    digits: list[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(digits)
        if Q > 0:
            a = (P + s) // Q
        else:
            a = (-P - s - 1) // (-Q)
        digits.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    return digits, seen[(P, Q)]
