"""Intervals whose endpoints are quadratic irrationals or infinite.

Used for sublevel sets of quadratic pieces, where endpoints are roots of
rational quadratics.  All endpoint comparisons are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .quadirr import QuadIrr, qi_cmp, rational_between
from .rationals import NEG_INF, POS_INF, _Infinity

End = Union[QuadIrr, _Infinity]


def end_cmp(a: End, b: End) -> int:
    if isinstance(a, _Infinity) or isinstance(b, _Infinity):
        sa = a.sign if isinstance(a, _Infinity) else 0
        sb = b.sign if isinstance(b, _Infinity) else 0
        # Finite values sit strictly between the infinities.
        if sa == sb and sa != 0:
            return 0
        return -1 if sa < sb else (1 if sa > sb else 0)
    return qi_cmp(a, b)


@dataclass(frozen=True)
class QInterval:
    lo: End
    lo_strict: bool
    hi: End
    hi_strict: bool

    @staticmethod
    def whole() -> "QInterval":
        return QInterval(NEG_INF, True, POS_INF, True)

    @staticmethod
    def of_rationals(
        lo, lo_strict: bool, hi, hi_strict: bool
    ) -> "QInterval":
        lo_e: End = lo if isinstance(lo, _Infinity) else QuadIrr.of(lo)
        hi_e: End = hi if isinstance(hi, _Infinity) else QuadIrr.of(hi)
        return QInterval(lo_e, lo_strict, hi_e, hi_strict)

    def nonempty(self) -> bool:
        c = end_cmp(self.lo, self.hi)
        if c > 0:
            return False
        if c == 0:
            if isinstance(self.lo, _Infinity):
                return False
            return not (self.lo_strict or self.hi_strict)
        return True


def qint_intersect(a: QInterval, b: QInterval) -> QInterval:
    c = end_cmp(a.lo, b.lo)
    lo, lo_s = (a.lo, a.lo_strict) if c > 0 else (b.lo, b.lo_strict)
    if c == 0:
        lo, lo_s = a.lo, a.lo_strict or b.lo_strict
    c = end_cmp(a.hi, b.hi)
    hi, hi_s = (a.hi, a.hi_strict) if c < 0 else (b.hi, b.hi_strict)
    if c == 0:
        hi, hi_s = a.hi, a.hi_strict or b.hi_strict
    return QInterval(lo, lo_s, hi, hi_s)


def qint_list_intersect(
    groups: list[list[QInterval]],
) -> list[QInterval]:
    """Intersection of unions of intervals, as a union of intervals."""
    current = [QInterval.whole()]
    for group in groups:
        nxt = []
        for cell in current:
            for other in group:
                merged = qint_intersect(cell, other)
                if merged.nonempty():
                    nxt.append(merged)
        current = nxt
        if not current:
            return []
    return current


def qint_pick_rational(iv: QInterval) -> Fraction | None:
    """A rational point inside the interval, or None for degenerate
    single-irrational-point intervals."""
    if not iv.nonempty():
        return None
    lo, hi = iv.lo, iv.hi
    if isinstance(lo, _Infinity) and isinstance(hi, _Infinity):
        return Fraction(0)
    if isinstance(lo, _Infinity):
        assert isinstance(hi, QuadIrr)
        if hi.is_rational():
            return hi.rational_value() - 1 if iv.hi_strict else hi.rational_value()
        return rational_between(QuadIrr.of(hi.a - abs(hi.b) * (hi.r + 1) - 1), hi)
    if isinstance(hi, _Infinity):
        assert isinstance(lo, QuadIrr)
        if lo.is_rational():
            return lo.rational_value() + 1 if iv.lo_strict else lo.rational_value()
        return rational_between(lo, QuadIrr.of(lo.a + abs(lo.b) * (lo.r + 1) + 1))
    if end_cmp(lo, hi) == 0:
        return lo.rational_value() if lo.is_rational() else None
    if not iv.lo_strict and lo.is_rational():
        return lo.rational_value()
    if not iv.hi_strict and hi.is_rational():
        return hi.rational_value()
    return rational_between(lo, hi)
