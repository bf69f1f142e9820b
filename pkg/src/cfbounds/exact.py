"""Exact arithmetic kernel: rationals, quadratic surds, radical sums.

Everything here is immutable and decided without floating point.  The
three value types:

* rationals -- ``fractions.Fraction`` (arbitrary precision, lowest terms);
* :class:`QuadSurd` -- (a + b*sqrt(d))/c with d squarefree, the field Q(sqrt(d));
* :class:`RadicalSum` -- a rational plus finitely many rational multiples of
  square roots of distinct non-square integers.

The sign of a RadicalSum is decided by adaptive-precision directed
rounding (doubling the working precision up to a cap) with an exact
recursive-squaring procedure as a fallback.  Because square roots of
distinct squarefree integers are linearly independent over Q, a
canonicalized RadicalSum is zero exactly when it is structurally zero,
so the adaptive path terminates on every nonzero value.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Union

__all__ = [
    "QuadSurd",
    "RadicalSum",
    "MixedFieldError",
    "UnsupportedExpressionError",
    "radical_sign",
    "surd_normalize",
    "surd_floor",
    "surd_arith",
    "square_free_split",
    "PRECISION_START_BITS",
    "PRECISION_CAP_BITS",
]

Rational = Union[int, Fraction]

PRECISION_START_BITS = 64
PRECISION_CAP_BITS = 1 << 14


class MixedFieldError(ValueError):
    """Arithmetic attempted between surds lying in different quadratic fields."""


class UnsupportedExpressionError(ValueError):
    """Radical expression outside the supported size for sign decisions."""


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return [i for i in range(limit) if flags[i]]


_SMALL_PRIMES = _sieve(10_000)

_split_cache: dict[int, tuple[int, int]] = {}


def square_free_split(n: int) -> tuple[int, int]:
    """Write n = s*s*k with k free of squares of primes below 10^4.

    Perfect squares are recognized at any size; a square factor p*p with
    p > 10^4 hidden inside a non-square composite is left in k.  No value
    arising from the supported operations hits that case.
    """
    if n <= 0:
        raise ValueError("radicand must be positive")
    cached = _split_cache.get(n)
    if cached is not None:
        return cached
    r = isqrt(n)
    if r * r == n:
        result = (r, 1)
    else:
        s, k, m = 1, 1, n
        for p in _SMALL_PRIMES:
            if p * p > m:
                break
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                s *= p ** (e >> 1)
                if e & 1:
                    k *= p
        if m > 1:
            r = isqrt(m)
            if r * r == m:
                s *= r
            else:
                k *= m
        result = (s, k)
    if len(_split_cache) < 1 << 16:
        _split_cache[n] = result
    return result


def _sgn(x: Fraction | int) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# RadicalSum


@dataclass(frozen=True, eq=True)
class RadicalSum:
    """c0 + sum of coef*sqrt(radicand) with distinct canonical radicands.

    Terms are normalized on construction: square parts of radicands are
    folded into coefficients, like radicands are combined, zero terms are
    dropped, and terms are sorted by radicand.  Two RadicalSums built from
    in-scope values are equal as reals iff they are equal as dataclasses.
    """

    c0: Fraction
    terms: tuple[tuple[Fraction, int], ...]

    def __init__(self, c0: Rational = 0, terms: Iterable[tuple[Rational, int]] = ()):
        acc: dict[int, Fraction] = {}
        const = Fraction(c0)
        for coef, rad in terms:
            coef = Fraction(coef)
            if coef == 0:
                continue
            s, k = square_free_split(rad)
            if k == 1:
                const += coef * s
            else:
                acc[k] = acc.get(k, Fraction(0)) + coef * s
        cleaned = tuple(sorted((c, r) for r, c in acc.items() if c != 0))
        object.__setattr__(self, "c0", const)
        object.__setattr__(self, "terms", tuple((c, r) for c, r in cleaned))

    # -- construction helpers

    @classmethod
    def sqrt(cls, n: int, coef: Rational = 1) -> "RadicalSum":
        return cls(0, [(coef, n)])

    @property
    def is_rational(self) -> bool:
        return not self.terms

    def as_fraction(self) -> Fraction:
        if self.terms:
            raise ValueError("value is irrational")
        return self.c0

    # -- ring operations

    def __add__(self, other: "RadicalSum | Rational") -> "RadicalSum":
        if isinstance(other, RadicalSum):
            return RadicalSum(self.c0 + other.c0, self.terms + other.terms)
        return RadicalSum(self.c0 + Fraction(other), self.terms)

    __radd__ = __add__

    def __neg__(self) -> "RadicalSum":
        return RadicalSum(-self.c0, [(-c, r) for c, r in self.terms])

    def __sub__(self, other: "RadicalSum | Rational") -> "RadicalSum":
        return self + (-other if isinstance(other, RadicalSum) else -Fraction(other))

    def __rsub__(self, other: Rational) -> "RadicalSum":
        return (-self) + Fraction(other)

    def __mul__(self, other: "RadicalSum | Rational") -> "RadicalSum":
        if not isinstance(other, RadicalSum):
            f = Fraction(other)
            return RadicalSum(self.c0 * f, [(c * f, r) for c, r in self.terms])
        new_terms: list[tuple[Fraction, int]] = []
        new_terms.extend((c * other.c0, r) for c, r in self.terms)
        new_terms.extend((c * self.c0, r) for c, r in other.terms)
        const = self.c0 * other.c0
        for c1, r1 in self.terms:
            for c2, r2 in other.terms:
                g = gcd(r1, r2)
                rad = (r1 // g) * (r2 // g)
                if rad == 1:
                    const += c1 * c2 * g
                else:
                    new_terms.append((c1 * c2 * g, rad))
        return RadicalSum(const, new_terms)

    __rmul__ = __mul__

    def __truediv__(self, other: "RadicalSum | Rational") -> "RadicalSum":
        if isinstance(other, RadicalSum):
            return self * other.inverse()
        f = Fraction(other)
        return RadicalSum(self.c0 / f, [(c / f, r) for c, r in self.terms])

    def __rtruediv__(self, other: Rational) -> "RadicalSum":
        return self.inverse() * Fraction(other)

    def inverse(self) -> "RadicalSum":
        """Exact reciprocal, by clearing one radical prime at a time."""
        num = RadicalSum(1)
        den = self
        guard = 0
        while den.terms:
            guard += 1
            if guard > 64:
                raise UnsupportedExpressionError("cannot rationalize denominator")
            p = _pick_split_prime(den.terms)
            conj = RadicalSum(
                den.c0, [(-c if r % p == 0 else c, r) for c, r in den.terms]
            )
            num *= conj
            den *= conj
        if den.c0 == 0:
            raise ZeroDivisionError("division by zero RadicalSum")
        return num / den.c0

    # -- sign machinery

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        """Enclosing interval with sqrt endpoints rounded at ``bits`` bits."""
        lo = hi = self.c0
        den = 1 << bits
        for c, r in self.terms:
            s = isqrt(r << (2 * bits))
            s_lo, s_hi = Fraction(s, den), Fraction(s + 1, den)
            if c > 0:
                lo += c * s_lo
                hi += c * s_hi
            else:
                lo += c * s_hi
                hi += c * s_lo
        return lo, hi

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}."""
        if not self.terms:
            return _sgn(self.c0)
        bits = PRECISION_START_BITS
        while bits <= PRECISION_CAP_BITS:
            lo, hi = self.interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        return self._sign_exact()

    def _sign_exact(self) -> int:
        """Recursive-squaring sign: isolate the radicals sharing one prime,
        square, and recurse on values with strictly fewer radical primes."""
        if not self.terms:
            return _sgn(self.c0)
        p = _pick_split_prime(self.terms)
        with_p = [(c, r) for c, r in self.terms if r % p == 0]
        rest = [(c, r) for c, r in self.terms if r % p != 0]
        x = RadicalSum(self.c0, rest)
        w = RadicalSum(0, [(c, r // p) for c, r in with_p])  # self = x + sqrt(p)*w
        sx = x.sign()
        sw = w.sign()
        if sx == 0:
            return sw
        if sw == 0 or sx == sw:
            return sx
        return sx * (x * x - w * w * p).sign()

    # -- rendering

    def decimal(self, significant: int = 50) -> str:
        """Correctly rounded decimal string with ``significant`` digits.

        Zero renders as "0"; everything else as d.dd...e<exp> (round half
        to even; for irrational values no tie can occur, for rational ones
        the tie is resolved exactly).
        """
        sgn = self.sign()
        if sgn == 0:
            return "0"
        if not self.terms:
            return _decimal_of_fraction(self.c0, significant)
        bits = 256
        while True:
            lo, hi = self.interval(bits)
            if _sgn(lo) == _sgn(hi) == sgn:
                a = _decimal_of_fraction(lo, significant)
                b = _decimal_of_fraction(hi, significant)
                if a == b:
                    return a
            if bits > (1 << 20):  # pragma: no cover - defensive
                raise UnsupportedExpressionError("decimal rendering did not settle")
            bits *= 2

    def __repr__(self) -> str:
        parts = [str(self.c0)] if self.c0 or not self.terms else []
        parts.extend(f"{c}*sqrt({r})" for c, r in self.terms)
        return " + ".join(parts).replace("+ -", "- ")


def _pick_split_prime(terms: Iterable[tuple[Fraction, int]]) -> int:
    rads = sorted(r for _, r in terms)
    for r in rads:
        for p in _SMALL_PRIMES:
            if p * p > r:
                break
            if r % p == 0:
                return p
    # smallest radicand is prime or a rough composite: splitting on the
    # value itself is exact for prime r and for in-scope composites
    return rads[0]


def _decimal_of_fraction(x: Fraction, significant: int) -> str:
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    n, d = abs(x.numerator), x.denominator
    # exponent e with 10^e <= n/d < 10^(e+1)
    e = len(str(n)) - len(str(d))
    while n * 10 ** max(0, -e) < d * 10 ** max(0, e):
        e -= 1
    while n * 10 ** max(0, -(e + 1)) >= d * 10 ** max(0, e + 1):
        e += 1
    shift = significant - 1 - e
    scaled = Fraction(n, d) * Fraction(10) ** shift
    digits = _round_half_even(scaled)
    if len(str(digits)) > significant:  # rounding rolled over, e.g. 999->1000
        digits //= 10
        e += 1
    ds = str(digits)
    return f"{sign}{ds[0]}.{ds[1:]}e{e:+03d}"


def _round_half_even(x: Fraction) -> int:
    floor = x.numerator // x.denominator
    frac2 = 2 * (x - floor)
    if frac2 > 1 or (frac2 == 1 and floor % 2 == 1):
        return floor + 1
    return floor


def radical_sign(s: RadicalSum) -> int:
    """Sign of a RadicalSum with at most 4 radical terms (public contract)."""
    if len(s.terms) > 4:
        raise UnsupportedExpressionError(
            f"sign supported for at most 4 radical terms, got {len(s.terms)}"
        )
    return s.sign()


# ---------------------------------------------------------------------------
# QuadSurd


@dataclass(frozen=True)
class QuadSurd:
    """(a + b*sqrt(d))/c in canonical form.

    Invariants: c >= 1, gcd(a, b, c) = 1, d squarefree, and d = 1 exactly
    when b = 0 (the rational embedding).  Use :meth:`make` to construct.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def make(cls, a: int, b: int, c: int, d: int) -> "QuadSurd":
        if c == 0:
            raise ZeroDivisionError("denominator c must be nonzero")
        if d <= 0:
            raise ValueError("radicand d must be positive")
        s, k = square_free_split(d)
        b *= s
        d = k
        if d == 1:
            a += b
            b = 0
        if b == 0:
            d = 1
        if c < 0:
            a, b, c = -a, -b, -c
        g = gcd(gcd(abs(a), abs(b)), c)
        return cls(a // g, b // g, c // g, d)

    @classmethod
    def from_rational(cls, x: Rational) -> "QuadSurd":
        f = Fraction(x)
        return cls.make(f.numerator, 0, f.denominator, 1)

    # -- predicates & conversions

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError("value is irrational")
        return Fraction(self.a, self.c)

    def to_radical(self) -> RadicalSum:
        return RadicalSum(Fraction(self.a, self.c), [(Fraction(self.b, self.c), self.d)])

    def conjugate(self) -> "QuadSurd":
        return QuadSurd.make(self.a, -self.b, self.c, self.d)

    def _coerce(self, other: "QuadSurd | Rational") -> "QuadSurd":
        if isinstance(other, QuadSurd):
            return other
        return QuadSurd.from_rational(other)

    def _common_d(self, other: "QuadSurd") -> int:
        if self.d == other.d:
            return self.d
        if self.b == 0:
            return other.d
        if other.b == 0:
            return self.d
        raise MixedFieldError(f"sqrt({self.d}) and sqrt({other.d}) span different fields")

    # -- field arithmetic

    def __add__(self, other: "QuadSurd | Rational") -> "QuadSurd":
        o = self._coerce(other)
        d = self._common_d(o)
        return QuadSurd.make(
            self.a * o.c + o.a * self.c,
            self.b * o.c + o.b * self.c,
            self.c * o.c,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other: "QuadSurd | Rational") -> "QuadSurd":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Rational) -> "QuadSurd":
        return (-self) + other

    def __mul__(self, other: "QuadSurd | Rational") -> "QuadSurd":
        o = self._coerce(other)
        d = self._common_d(o)
        return QuadSurd.make(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            self.c * o.c,
            d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: "QuadSurd | Rational") -> "QuadSurd":
        o = self._coerce(other)
        d = self._common_d(o)
        norm = o.a * o.a - o.b * o.b * d
        if norm == 0:
            raise ZeroDivisionError("division by zero surd")
        # 1/o = c*(a - b*sqrt(d))/norm
        return self * QuadSurd.make(o.c * o.a, -o.c * o.b, norm, d)

    def __rtruediv__(self, other: Rational) -> "QuadSurd":
        return QuadSurd.from_rational(other) / self

    def __pow__(self, n: int) -> "QuadSurd":
        if n < 0:
            return (QuadSurd.from_rational(1) / self) ** (-n)
        result = QuadSurd.from_rational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order

    def sign(self) -> int:
        if self.b == 0:
            return _sgn(self.a)
        if self.a == 0 or _sgn(self.a) == _sgn(self.b):
            return _sgn(self.b) if self.a == 0 else _sgn(self.a)
        # a and b*sqrt(d) have opposite signs: compare a^2 with b^2*d
        return _sgn(self.a) * _sgn(self.a * self.a - self.b * self.b * self.d)

    def floor(self) -> int:
        """Exact floor via integer bracketing of sqrt(d)."""
        t = self.b * self.b * self.d
        s = isqrt(t)
        if self.b >= 0:
            fb = s
        else:
            fb = -s if s * s == t else -(s + 1)
        return (self.a + fb) // self.c

    def __lt__(self, other: "QuadSurd | Rational") -> bool:
        return (self - self._coerce(other)).sign() < 0

    def __le__(self, other: "QuadSurd | Rational") -> bool:
        return (self - self._coerce(other)).sign() <= 0

    def __gt__(self, other: "QuadSurd | Rational") -> bool:
        return (self - self._coerce(other)).sign() > 0

    def __ge__(self, other: "QuadSurd | Rational") -> bool:
        return (self - self._coerce(other)).sign() >= 0

    def __repr__(self) -> str:
        if self.b == 0:
            return f"{self.a}/{self.c}" if self.c != 1 else str(self.a)
        return f"({self.a}{self.b:+d}*sqrt({self.d}))/{self.c}"


# ---------------------------------------------------------------------------
# spec-named operation wrappers


def surd_normalize(a: int, b: int, c: int, d: int) -> QuadSurd:
    """Canonical (a + b*sqrt(d))/c; rejects c = 0 and d < 1."""
    return QuadSurd.make(a, b, c, d)


def surd_floor(x: QuadSurd) -> int:
    return x.floor()


def surd_arith(x: QuadSurd, y: QuadSurd, op: str) -> QuadSurd:
    """Field arithmetic dispatcher; op in {add, sub, mul, div}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")
