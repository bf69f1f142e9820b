"""Parser for the textual number-spec language used by the CLI.

Grammar (whitespace-insensitive)::

    rat:<int>/<posint>
    surd:(<int>+<int>*sqrt(<posint>))/<posint>      (+ may be -)
    cf:[<int>]  |  cf:[<int>;q1,q2,...]             with optional trailing
                                                    (p1,...,pr) period group
    dec:<digits>.<digits>~<precision-digits>

``dec`` values carry finite precision and are excluded from exact
theorem claims; everything else parses to an exact value.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cf import CFExpansion, expand_rational, expand_surd, _purely_periodic_value
from .exact import QuadSurd

__all__ = ["DecPrefix", "NumberSpec", "SpecParseError", "parse_number", "render"]


class SpecParseError(ValueError):
    def __init__(self, message: str, pos: int = 0):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class DecPrefix:
    """Decimal prefix: value known only to ``places`` decimal places."""

    value: Fraction
    places: int


ParsedValue = Union[Fraction, QuadSurd, CFExpansion, DecPrefix]


@dataclass(frozen=True)
class NumberSpec:
    text: str
    kind: str
    parsed: ParsedValue

    @property
    def is_exact(self) -> bool:
        return self.kind != "dec"


_RAT = re.compile(r"(-?\d+)/(\d+)\Z")
_SURD = re.compile(r"\((-?\d+)([+-]\d+)\*sqrt\((\d+)\)\)/(\d+)\Z")
_CF = re.compile(r"\[(-?\d+)(?:;(.*))?\]\Z")
_DEC = re.compile(r"(-?\d+)\.(\d+)~(\d+)\Z")


def parse_number(text: str) -> NumberSpec:
    compact = "".join(text.split())
    if ":" not in compact:
        raise SpecParseError("expected '<kind>:<body>'", 0)
    kind, body = compact.split(":", 1)
    pos = len(kind) + 1
    if kind == "rat":
        m = _RAT.match(body)
        if not m:
            raise SpecParseError("expected rat:<int>/<posint>", pos)
        den = int(m.group(2))
        if den == 0:
            raise SpecParseError("zero denominator", pos + body.index("/") + 1)
        return NumberSpec(compact, "rat", Fraction(int(m.group(1)), den))
    if kind == "surd":
        m = _SURD.match(body)
        if not m:
            raise SpecParseError("expected surd:(<int>+<int>*sqrt(<posint>))/<posint>", pos)
        a, b, d, c = int(m.group(1)), int(m.group(2)), int(m.group(3)), int(m.group(4))
        if c == 0:
            raise SpecParseError("zero denominator", pos + body.rindex("/") + 1)
        if d == 0:
            raise SpecParseError("radicand must be positive", pos + body.index("sqrt") + 5)
        return NumberSpec(compact, "surd", QuadSurd.make(a, b, c, d))
    if kind == "cf":
        return NumberSpec(compact, "cf", _parse_cf(body, pos))
    if kind == "dec":
        m = _DEC.match(body)
        if not m:
            raise SpecParseError("expected dec:<digits>.<digits>~<precision>", pos)
        int_part, frac_part, places = m.group(1), m.group(2), int(m.group(3))
        value = Fraction(int(int_part + frac_part), 10 ** len(frac_part))
        if int_part.startswith("-"):
            value = -abs(value)
        return NumberSpec(compact, "dec", DecPrefix(value, places))
    raise SpecParseError(f"unknown kind {kind!r}", 0)


def _parse_cf(body: str, pos: int) -> CFExpansion:
    m = _CF.match(body)
    if not m:
        raise SpecParseError("expected cf:[<int>;q1,q2,...] with optional (period)", pos)
    a0 = int(m.group(1))
    rest = m.group(2)
    head: list[int] = []
    period: list[int] = []
    if rest:
        per_part = None
        if "(" in rest:
            idx = rest.index("(")
            if not rest.endswith(")"):
                raise SpecParseError("unterminated period group", pos + len(body) - 1)
            per_part = rest[idx + 1 : -1]
            rest = rest[:idx].rstrip(",")
        for item in filter(None, rest.split(",")) if rest else ():
            head.append(_positive_quotient(item, pos))
        if per_part is not None:
            if not per_part:
                raise SpecParseError("empty period", pos)
            period = [_positive_quotient(item, pos) for item in per_part.split(",")]
    if not period:
        digits = [a0, *head]
        value = Fraction(digits[-1])
        for a in reversed(digits[:-1]):
            value = a + 1 / value
        return expand_rational(value)
    t = _purely_periodic_value(tuple(period))
    v: QuadSurd | None = None
    for a in reversed([a0, *head]):
        v = a + 1 / (t if v is None else v)
    assert v is not None
    return expand_surd(v)


def _positive_quotient(item: str, pos: int) -> int:
    if not item.isdigit() or int(item) < 1:
        raise SpecParseError(f"partial quotient {item!r} must be a positive integer", pos)
    return int(item)


def render(spec: NumberSpec) -> str:
    """Canonical text; reparsing yields an equal parsed value."""
    v = spec.parsed
    if isinstance(v, Fraction):
        return f"rat:{v.numerator}/{v.denominator}"
    if isinstance(v, QuadSurd):
        return f"surd:({v.a}{v.b:+d}*sqrt({v.d}))/{v.c}"
    if isinstance(v, CFExpansion):
        return "cf:" + v.render()
    return f"dec:{_dec_text(v)}"


def _dec_text(d: DecPrefix) -> str:
    sign = "-" if d.value < 0 else ""
    n, den = abs(d.value.numerator), d.value.denominator
    # den divides a power of ten; find the smallest exponent that clears it
    digits = 0
    scale = 1
    while scale % den:
        digits += 1
        scale *= 10
    whole, frac = divmod(n * (scale // den), scale)
    frac_text = str(frac).zfill(digits) if digits else "0"
    return f"{sign}{whole}.{frac_text}~{d.places}"
