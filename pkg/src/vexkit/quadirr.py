"""Exact arithmetic-free comparisons for quadratic irrationals a + b*sqrt(r).

Roots of rational quadratics land here.  We never approximate: signs and
comparisons are decided by case analysis and squaring, so every decision
the toolkit makes about sublevel-set endpoints is exact.  Comparisons are
supported between two values (hence up to two distinct radicands), which is
all the intersection machinery ever needs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rationals import Q


def sqrt_exact(x: Fraction) -> Fraction | None:
    """Exact rational square root of x >= 0, or None if irrational."""
    if x < 0:
        raise ValueError("negative radicand")
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Q(rn, rd)
    return None


@dataclass(frozen=True)
class QuadIrr:
    """The real number a + b*sqrt(r) with rational a, b and r >= 0.

    Normalised so that purely rational values carry b == 0 and r == 0.
    """

    a: Fraction
    b: Fraction
    r: Fraction

    @staticmethod
    def make(a: Fraction, b: Fraction = Q(0), r: Fraction = Q(0)) -> "QuadIrr":
        if r < 0:
            raise ValueError("negative radicand")
        if b == 0 or r == 0:
            return QuadIrr(a, Q(0), Q(0))
        root = sqrt_exact(r)
        if root is not None:
            return QuadIrr(a + b * root, Q(0), Q(0))
        return QuadIrr(a, b, r)

    @staticmethod
    def of(x: Fraction) -> "QuadIrr":
        return QuadIrr(Q(x), Q(0), Q(0))

    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("irrational value")
        return self.a

    def sign(self) -> int:
        """Sign of a + b*sqrt(r), exactly."""
        a, b, r = self.a, self.b, self.r
        if b == 0:
            return 0 if a == 0 else (1 if a > 0 else -1)
        if a == 0:
            return 1 if b > 0 else -1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # Opposite signs: compare a^2 with b^2 r; sqrt(r) irrational, so
        # equality cannot occur (it would force sqrt(r) = -a/b rational).
        lhs, rhs = a * a, b * b * r
        if a > 0:  # b < 0: positive iff a^2 > b^2 r
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1  # a < 0, b > 0

    def __neg__(self) -> "QuadIrr":
        return QuadIrr(-self.a, -self.b, self.r)

    def shifted(self, c: Fraction) -> "QuadIrr":
        return QuadIrr(self.a + c, self.b, self.r)

    def __float__(self) -> float:  # debugging aid only
        return float(self.a) + float(self.b) * math.sqrt(float(self.r))


def _sign_sum_with_radical(u: QuadIrr, c: Fraction, s: Fraction) -> int:
    """Sign of u + c*sqrt(s) where u may itself carry one radical."""
    if c == 0 or s == 0:
        return u.sign()
    root = sqrt_exact(s)
    if root is not None:
        return u.shifted(c * root).sign()
    if u.b == 0:
        return QuadIrr.make(u.a, c, s).sign()
    su = u.sign()
    sv = 1 if c > 0 else -1
    if su == 0:
        return sv
    if su == sv:
        return su
    # Opposite signs: compare u^2 against c^2 s.  u^2 keeps a single
    # radical: (a^2 + b^2 r) + 2ab sqrt(r).
    t = QuadIrr.make(
        u.a * u.a + u.b * u.b * u.r - c * c * s, 2 * u.a * u.b, u.r
    )
    ts = t.sign()
    if ts == 0:
        return 0
    return su if ts > 0 else sv


def qi_cmp(x: QuadIrr, y: QuadIrr) -> int:
    """Three-way comparison of two quadratic irrationals (any radicands)."""
    # x - y = (a1 - a2) + b1 sqrt(r1) - b2 sqrt(r2)
    u = QuadIrr.make(x.a - y.a, x.b, x.r)
    return _sign_sum_with_radical(u, -y.b, y.r)


def qi_lt(x: QuadIrr, y: QuadIrr) -> bool:
    return qi_cmp(x, y) < 0


def qi_le(x: QuadIrr, y: QuadIrr) -> bool:
    return qi_cmp(x, y) <= 0


def qi_eq(x: QuadIrr, y: QuadIrr) -> bool:
    return qi_cmp(x, y) == 0


def qi_min(x: QuadIrr, y: QuadIrr) -> QuadIrr:
    return x if qi_le(x, y) else y


def qi_max(x: QuadIrr, y: QuadIrr) -> QuadIrr:
    return x if qi_le(y, x) else y


def rational_between(lo: QuadIrr, hi: QuadIrr) -> Fraction:
    """Some rational strictly between lo and hi (requires lo < hi)."""
    if not qi_lt(lo, hi):
        raise ValueError("empty open interval")
    if lo.is_rational() and hi.is_rational():
        return (lo.a + hi.a) / 2
    # Bisect from a rational bracket.  Widths halve each step, so this
    # terminates as soon as the dyadic midpoint clears both endpoints.
    left = lo.a - abs(lo.b) * (lo.r + 1)  # crude rational lower bound
    right = hi.a + abs(hi.b) * (hi.r + 1)
    for _ in range(10_000):
        mid = (left + right) / 2
        m = QuadIrr.of(mid)
        if qi_lt(lo, m) and qi_lt(m, hi):
            return mid
        if qi_le(m, lo):
            left = mid
        else:
            right = mid
    raise RuntimeError("bisection failed to separate quadratic irrationals")
