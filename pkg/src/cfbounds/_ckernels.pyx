# cython: language_level=3
# distutils: language = c++
"""Compiled implementations of the hot inner loops.

Mirrors ``_kernels_py`` exactly; the periodic expansion additionally has an
int64 fast path (state packed into a C++ hash map) entered once the surd
state is small enough to be overflow-safe.
"""

from libcpp.unordered_map cimport unordered_map

from math import isqrt

BACKEND_NAME = "compiled"


def rational_cf_digits(num, den):
    """Continued-fraction digits of num/den (den > 0) via the Euclidean loop."""
    if den <= 0:
        raise ValueError("denominator must be positive")
    digits = []
    while den:
        a = num // den
        digits.append(a)
        num, den = den, num - a * den
    return digits


def convergent_pairs(digits, count):
    """First ``count`` convergents (p_n, q_n) of the given digit list."""
    if count > len(digits):
        raise ValueError("not enough digits for requested convergents")
    out = []
    p0, q0 = 1, 0
    p1, q1 = 0, 1
    cdef Py_ssize_t i
    for i in range(count):
        a = digits[i]
        p0, p1 = a * p0 + p1, p0
        q0, q1 = a * q0 + q1, q0
        out.append((p0, q0))
    return out


DEF FAST_LIMIT = 2147483648  # 2^31; keeps every intermediate inside int64


def periodic_cf_digits(P, Q, D):
    """Digit stream of (P + sqrt(D))/Q until the state (P, Q) repeats.

    Requires D > 0 not a perfect square and Q | D - P*P.  Returns the
    digits emitted before the first repeated state together with the
    index in that list where the cycle starts.  If the cycle was entered
    during the transient phase the reported start may lie past the true
    one; the caller's head/period canonicalization absorbs the shift.
    """
    s = isqrt(D)
    if s * s == D:
        raise ValueError("D must not be a perfect square")
    seen = {}
    digits = []
    while (P, Q) not in seen:
        # once |P| <= s and Q > 0 the in-range invariant is self-sustaining
        if D < FAST_LIMIT and 0 < Q < FAST_LIMIT and -s <= P <= s:
            tail_digits, cycle = _periodic_fast(P, Q, D, s)
            return digits + tail_digits, len(digits) + cycle
        seen[(P, Q)] = len(digits)
        if Q > 0:
            a = (P + s) // Q
        else:
            a = (-P - s - 1) // (-Q)
        digits.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    return digits, seen[(P, Q)]


cdef _periodic_fast(long long P, long long Q, long long D, long long s):
    # From |P| <= s, Q > 0: a = (P+s)//Q >= 0, the next P stays in
    # [s+1-Q, s] (hence in [-s, s] ... D), and Q stays in (0, D].
    cdef unordered_map[long long, long long] seen
    cdef long long a, key, start
    digits = []
    while True:
        key = P * 4294967296LL + Q
        if seen.count(key):
            start = seen[key]
            return digits, start
        seen[key] = len(digits)
        a = (P + s) // Q
        digits.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
