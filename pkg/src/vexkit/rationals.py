"""Exact rational scalars and the two signed infinities.

Every quantity in the toolkit is a ``fractions.Fraction`` (arbitrary
precision, always lowest terms, positive denominator) or one of the
singletons ``POS_INF`` / ``NEG_INF``.  Infinities only ever participate in
comparisons and negation; arithmetic that would mix them with finite
rationals is a bug and raises ``TypeError``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Q = Fraction


class _Infinity:
    """Signed infinity, totally ordered against every rational."""

    __slots__ = ("sign",)

    def __init__(self, sign: int):
        self.sign = sign

    def __neg__(self) -> "_Infinity":
        return NEG_INF if self.sign > 0 else POS_INF

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Infinity) and other.sign == self.sign

    def __hash__(self) -> int:
        return hash(("vexkit-inf", self.sign))

    def __lt__(self, other: object) -> bool:
        if isinstance(other, _Infinity):
            return self.sign < other.sign
        if isinstance(other, (Fraction, int)):
            return self.sign < 0
        return NotImplemented

    def __le__(self, other: object) -> bool:
        eq = self.__eq__(other)
        lt = self.__lt__(other)
        if lt is NotImplemented:
            return NotImplemented
        return eq or lt

    def __gt__(self, other: object) -> bool:
        le = self.__le__(other)
        if le is NotImplemented:
            return NotImplemented
        return not le

    def __ge__(self, other: object) -> bool:
        lt = self.__lt__(other)
        if lt is NotImplemented:
            return NotImplemented
        return not lt

    def __repr__(self) -> str:
        return "POS_INF" if self.sign > 0 else "NEG_INF"


POS_INF = _Infinity(1)
NEG_INF = _Infinity(-1)

# A scalar extended with the two infinities.
ExtQ = Union[Fraction, _Infinity]


def is_finite(x: ExtQ) -> bool:
    return not isinstance(x, _Infinity)


def ext_min(*values: ExtQ) -> ExtQ:
    best = values[0]
    for v in values[1:]:
        if ext_lt(v, best):
            best = v
    return best


def ext_max(*values: ExtQ) -> ExtQ:
    best = values[0]
    for v in values[1:]:
        if ext_lt(best, v):
            best = v
    return best


def ext_lt(a: ExtQ, b: ExtQ) -> bool:
    if isinstance(a, _Infinity):
        return a.__lt__(b) is True
    if isinstance(b, _Infinity):
        return b.sign > 0
    return a < b


def ext_le(a: ExtQ, b: ExtQ) -> bool:
    return a == b or ext_lt(a, b)


def qstr(x: ExtQ) -> str:
    """Canonical string form: lowest terms, "p/q" or "p", "inf"/"-inf"."""
    if isinstance(x, _Infinity):
        return "inf" if x.sign > 0 else "-inf"
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_q(text: str) -> ExtQ:
    """Inverse of :func:`qstr`.  Accepts "p/q", "p", "inf", "-inf"."""
    s = text.strip()
    if s == "inf" or s == "+inf":
        return POS_INF
    if s == "-inf":
        return NEG_INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def dyadic(k: int) -> Fraction:
    """2**k as an exact rational (k may be negative)."""
    if k >= 0:
        return Fraction(2**k)
    return Fraction(1, 2 ** (-k))


def dyadic_grid(lo: Fraction, hi: Fraction, depth: int) -> list[Fraction]:
    """All dyadic rationals i/2**depth inside [lo, hi], ascending."""
    den = 2**depth
    start = -((-lo.numerator * den) // lo.denominator)  # ceil(lo * den)
    stop = (hi.numerator * den) // hi.denominator  # floor(hi * den)
    return [Fraction(i, den) for i in range(start, stop + 1)]
