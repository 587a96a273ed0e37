"""Continuous piecewise-quadratic functions on the real line.

The breakpoints split the line into intervals; each carries one quadratic
piece a2*x^2 + a1*x + a0.  Degree is capped at two so that every critical
point is rational and every sublevel endpoint is at worst a quadratic
irrational.  Discontinuous data is rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyWindowError, MalformedInputError
from .qintervals import QInterval, qint_intersect
from .quadirr import QuadIrr
from .rationals import NEG_INF, POS_INF, ExtQ, Q, _Infinity, ext_lt

Piece = tuple[Fraction, Fraction, Fraction]  # (a2, a1, a0)


@dataclass(frozen=True)
class PQFunction:
    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Piece, ...]

    def __post_init__(self):
        if len(self.pieces) != len(self.breakpoints) + 1:
            raise MalformedInputError("need exactly one piece per interval")
        if not self.pieces:
            raise MalformedInputError("at least one piece required")
        for a, b in zip(self.breakpoints, self.breakpoints[1:]):
            if not a < b:
                raise MalformedInputError("breakpoints must strictly increase")
        for bp, (left, right) in zip(
            self.breakpoints, zip(self.pieces, self.pieces[1:])
        ):
            if _eval_piece(left, bp) != _eval_piece(right, bp):
                raise MalformedInputError(
                    f"pieces disagree at breakpoint {bp}: discontinuous input"
                )

    @staticmethod
    def constant(c) -> "PQFunction":
        return PQFunction((), ((Q(0), Q(0), Q(c)),))

    @staticmethod
    def linear(slope, intercept=0) -> "PQFunction":
        return PQFunction((), ((Q(0), Q(slope), Q(intercept)),))

    @staticmethod
    def from_data(breakpoints, pieces) -> "PQFunction":
        return PQFunction(
            tuple(Q(b) for b in breakpoints),
            tuple((Q(a2), Q(a1), Q(a0)) for a2, a1, a0 in pieces),
        )

    def piece_interval(self, i: int) -> tuple[ExtQ, ExtQ]:
        lo = self.breakpoints[i - 1] if i > 0 else NEG_INF
        hi = self.breakpoints[i] if i < len(self.breakpoints) else POS_INF
        return lo, hi

    def piece_index_at(self, x: Fraction) -> int:
        for i, bp in enumerate(self.breakpoints):
            if x <= bp:
                return i
        return len(self.pieces) - 1

    def value(self, x) -> Fraction:
        return _eval_piece(self.pieces[self.piece_index_at(Q(x))], Q(x))

    def left_slope(self, x) -> Fraction:
        """Derivative of the piece governing (x - delta, x]."""
        x = Q(x)
        i = self.piece_index_at(x)
        return _slope(self.pieces[i], x)

    def right_slope(self, x) -> Fraction:
        """Derivative of the piece governing [x, x + delta)."""
        x = Q(x)
        i = self.piece_index_at(x)
        if i < len(self.breakpoints) and x == self.breakpoints[i]:
            i += 1
        return _slope(self.pieces[i], x)

    def is_kink(self, x) -> bool:
        return self.left_slope(x) != self.right_slope(x)

    def max_abs_slope(self, lo: Fraction, hi: Fraction) -> Fraction:
        """Exact sup of |derivative| over [lo, hi] (slopes are affine per piece)."""
        if lo > hi:
            raise EmptyWindowError("empty slope window")
        best = Q(0)
        for i, piece in enumerate(self.pieces):
            pl, ph = self.piece_interval(i)
            left = lo if isinstance(pl, _Infinity) or pl < lo else pl
            right = hi if isinstance(ph, _Infinity) or ph > hi else ph
            if left > right:
                continue
            best = max(best, abs(_slope(piece, left)), abs(_slope(piece, right)))
        return best

    def translate(self, dx, dy) -> "PQFunction":
        """The function x -> f(x - dx) + dy."""
        dx, dy = Q(dx), Q(dy)
        bps = tuple(b + dx for b in self.breakpoints)
        pieces = []
        for a2, a1, a0 in self.pieces:
            # a2 (x-dx)^2 + a1 (x-dx) + a0 + dy
            pieces.append(
                (a2, a1 - 2 * a2 * dx, a2 * dx * dx - a1 * dx + a0 + dy)
            )
        return PQFunction(bps, tuple(pieces))


def _eval_piece(piece: Piece, x: Fraction) -> Fraction:
    a2, a1, a0 = piece
    return a2 * x * x + a1 * x + a0


def _slope(piece: Piece, x: Fraction) -> Fraction:
    a2, a1, _ = piece
    return 2 * a2 * x + a1


def pq_inf(
    fn: PQFunction,
    lo: ExtQ,
    lo_open: bool,
    hi: ExtQ,
    hi_open: bool,
) -> tuple[ExtQ, bool]:
    """Exact infimum of fn over the window, with attainment flag.

    Candidate minimisers are window endpoints, breakpoints inside the
    window and rational critical points of the quadratic pieces; infinite
    tails are handled by their limit behaviour.
    """
    if _window_empty(lo, lo_open, hi, hi_open):
        raise EmptyWindowError("pq_inf over empty window")
    best: ExtQ | None = None
    best_attained = False
    single_point = lo == hi

    def offer(value: ExtQ, attained: bool) -> None:
        nonlocal best, best_attained
        if best is None or ext_lt(value, best):
            best, best_attained = value, attained
        elif value == best and attained:
            best_attained = True

    for i, piece in enumerate(fn.pieces):
        pl, ph = fn.piece_interval(i)
        # Clamp the window to the piece's interval (closed at breakpoints).
        left, left_open = (pl, False) if ext_lt(lo, pl) else (lo, lo_open)
        right, right_open = (ph, False) if ext_lt(ph, hi) else (hi, hi_open)
        if ext_lt(right, left) or (left == right and (left_open or right_open)):
            continue
        a2, a1, a0 = piece
        if isinstance(left, _Infinity):
            if a2 < 0 or (a2 == 0 and a1 > 0):
                offer(NEG_INF, False)
            elif a2 == 0 and a1 == 0:
                offer(a0, True)
        else:
            offer(_eval_piece(piece, left), not left_open)
        if isinstance(right, _Infinity):
            if a2 < 0 or (a2 == 0 and a1 < 0):
                offer(NEG_INF, False)
            elif a2 == 0 and a1 == 0:
                offer(a0, True)
        else:
            offer(_eval_piece(piece, right), not right_open)
        if a2 != 0:
            xc = -a1 / (2 * a2)
            if ext_lt(left, xc) and ext_lt(xc, right):
                offer(_eval_piece(piece, xc), True)
        elif a1 == 0 and not single_point:
            # Constant piece over a window with interior.
            if ext_lt(left, right):
                offer(a0, True)
    assert best is not None
    return best, best_attained


def pq_sublevel(
    fn: PQFunction, level: Fraction, strict: bool
) -> list[QInterval]:
    """{x : fn(x) <= level} (or < for strict) as intervals with exact
    (possibly quadratic-irrational) endpoints."""
    out: list[QInterval] = []
    level = Q(level)
    for i, piece in enumerate(fn.pieces):
        pl, ph = fn.piece_interval(i)
        window = QInterval.of_rationals(
            pl, isinstance(pl, _Infinity), ph, isinstance(ph, _Infinity)
        )
        for sol in _quadratic_sublevel(piece, level, strict):
            merged = qint_intersect(window, sol)
            if merged.nonempty():
                out.append(merged)
    return out


def _quadratic_sublevel(
    piece: Piece, level: Fraction, strict: bool
) -> list[QInterval]:
    a2, a1, a0 = piece
    c = a0 - level
    if a2 == 0:
        if a1 == 0:
            ok = c < 0 if strict else c <= 0
            return [QInterval.whole()] if ok else []
        x_star = -c / a1
        if a1 > 0:
            return [QInterval.of_rationals(NEG_INF, True, x_star, strict)]
        return [QInterval.of_rationals(x_star, strict, POS_INF, True)]
    disc = a1 * a1 - 4 * a2 * c
    if disc < 0:
        # Constant sign equal to sign(a2).
        return [] if a2 > 0 else [QInterval.whole()]
    half = Q(1, 2) / a2
    root_m = QuadIrr.make(-a1 * half, -abs(half), disc)
    root_p = QuadIrr.make(-a1 * half, abs(half), disc)
    if disc == 0:
        if a2 > 0:
            if strict:
                return []
            return [QInterval(root_m, False, root_m, False)]
        return [QInterval.whole()]
    if a2 > 0:
        return [QInterval(root_m, strict, root_p, strict)]
    return [
        QInterval(NEG_INF, True, root_m, strict),
        QInterval(root_p, strict, POS_INF, True),
    ]


def _window_empty(lo: ExtQ, lo_open: bool, hi: ExtQ, hi_open: bool) -> bool:
    if isinstance(lo, _Infinity) or isinstance(hi, _Infinity):
        return ext_lt(hi, lo)
    if lo > hi:
        return True
    return lo == hi and (lo_open or hi_open)
