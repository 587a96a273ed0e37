"""Finitely represented subsets of R^n and exact operations on them.

A set expression is one of: H-polyhedron, finite union, singleton,
1-D interval, epigraph of a piecewise-quadratic function, or a product.
Emptiness, membership, distance thresholds and intersection tests are all
decided exactly; the only inexactness ever surfaced is an explicit
``ExactnessError`` when a requested *value* (not decision) is irrational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .errors import (
    DimensionMismatchError,
    ExactnessError,
    MalformedInputError,
)
from .polyhedra import (
    REL_EQ,
    REL_LE,
    REL_LT,
    FeasibilityResult,
    HPolyhedron,
    HRow,
    box_rows,
    lp_feasible,
    optimize_closed,
)
from .pqfunctions import PQFunction, pq_inf, pq_sublevel
from .qintervals import QInterval, qint_list_intersect, qint_pick_rational
from .quadirr import QuadIrr, qi_cmp
from .rationals import (
    NEG_INF,
    POS_INF,
    ExtQ,
    Q,
    _Infinity,
    ext_lt,
    is_finite,
)
from .vectors import Vec


class SetExpr:
    """Base class; concrete variants are the dataclasses below."""

    dim: int


@dataclass(frozen=True)
class PolyhedronSet(SetExpr):
    poly: HPolyhedron

    @property
    def dim(self) -> int:
        return self.poly.dim


@dataclass(frozen=True)
class UnionSet(SetExpr):
    members: tuple[SetExpr, ...]
    ambient_dim: int

    def __post_init__(self):
        for m in self.members:
            if m.dim != self.ambient_dim:
                raise DimensionMismatchError("union members must share one dim")

    @property
    def dim(self) -> int:
        return self.ambient_dim


@dataclass(frozen=True)
class SingletonSet(SetExpr):
    point: Vec

    @property
    def dim(self) -> int:
        return self.point.dim


@dataclass(frozen=True)
class IntervalSet(SetExpr):
    lo: ExtQ
    lo_closed: bool
    hi: ExtQ
    hi_closed: bool

    def __post_init__(self):
        if isinstance(self.lo, _Infinity) and self.lo_closed:
            raise MalformedInputError("infinite endpoint cannot be closed")
        if isinstance(self.hi, _Infinity) and self.hi_closed:
            raise MalformedInputError("infinite endpoint cannot be closed")
        if ext_lt(self.hi, self.lo):
            raise MalformedInputError("empty interval; use empty_set(1)")
        if self.lo == self.hi and is_finite(self.lo):
            if not (self.lo_closed and self.hi_closed):
                raise MalformedInputError("degenerate interval must be closed")

    @property
    def dim(self) -> int:
        return 1

    @staticmethod
    def of(lo, lo_closed, hi, hi_closed) -> "IntervalSet":
        lo_v = lo if isinstance(lo, _Infinity) else Q(lo)
        hi_v = hi if isinstance(hi, _Infinity) else Q(hi)
        return IntervalSet(lo_v, lo_closed, hi_v, hi_closed)

    @staticmethod
    def whole_line() -> "IntervalSet":
        return IntervalSet(NEG_INF, False, POS_INF, False)

    @staticmethod
    def lower_ray(t, closed=True) -> "IntervalSet":
        return IntervalSet(NEG_INF, False, Q(t), closed)

    @staticmethod
    def upper_ray(t, closed=True) -> "IntervalSet":
        return IntervalSet(Q(t), closed, POS_INF, False)

    @staticmethod
    def point(t) -> "IntervalSet":
        return IntervalSet(Q(t), True, Q(t), True)


@dataclass(frozen=True)
class EpigraphSet(SetExpr):
    fn: PQFunction

    @property
    def dim(self) -> int:
        return 2


@dataclass(frozen=True)
class ProductSet(SetExpr):
    factors: tuple[SetExpr, ...]

    def __post_init__(self):
        if not self.factors:
            raise MalformedInputError("product needs at least one factor")

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)


def empty_set(dim: int) -> UnionSet:
    return UnionSet((), dim)


def whole_space(dim: int) -> SetExpr:
    if dim == 1:
        return IntervalSet.whole_line()
    return PolyhedronSet(HPolyhedron.whole_space(dim))


# ---------------------------------------------------------------------------
# Cells: the convex pieces every variant decomposes into.


@dataclass(frozen=True)
class EpiCon:
    """Constraint coords[y_dim] >= fn(coords[x_dim])."""

    x_dim: int
    y_dim: int
    fn: PQFunction


@dataclass(frozen=True)
class Cell:
    dim: int
    rows: tuple[HRow, ...]
    epis: tuple[EpiCon, ...]


def cells(s: SetExpr) -> list[Cell]:
    if isinstance(s, PolyhedronSet):
        return [Cell(s.dim, s.poly.rows, ())]
    if isinstance(s, SingletonSet):
        rows = []
        n = s.dim
        for i, c in enumerate(s.point.coords):
            e = [Q(0)] * n
            e[i] = Q(1)
            rows.append(HRow(Vec(tuple(e)), REL_EQ, c))
        return [Cell(n, tuple(rows), ())]
    if isinstance(s, IntervalSet):
        return [Cell(1, tuple(_interval_rows(s, 0, 1)), ())]
    if isinstance(s, EpigraphSet):
        return [Cell(2, (), (EpiCon(0, 1, s.fn),))]
    if isinstance(s, UnionSet):
        out: list[Cell] = []
        for m in s.members:
            out.extend(cells(m))
        return out
    if isinstance(s, ProductSet):
        combos: list[Cell] = [Cell(s.dim, (), ())]
        offset = 0
        for f in s.factors:
            fcells = cells(f)
            nxt = []
            for base in combos:
                for fc in fcells:
                    nxt.append(
                        Cell(
                            s.dim,
                            base.rows + tuple(_shift_row(r, offset, s.dim) for r in fc.rows),
                            base.epis
                            + tuple(
                                EpiCon(e.x_dim + offset, e.y_dim + offset, e.fn)
                                for e in fc.epis
                            ),
                        )
                    )
            combos = nxt
            offset += f.dim
        return combos
    raise MalformedInputError(f"unknown set expression {type(s).__name__}")


def _interval_rows(iv: IntervalSet, coord: int, dim: int) -> list[HRow]:
    rows = []
    if is_finite(iv.hi):
        e = [Q(0)] * dim
        e[coord] = Q(1)
        rows.append(HRow(Vec(tuple(e)), REL_LE if iv.hi_closed else REL_LT, iv.hi))
    if is_finite(iv.lo):
        e = [Q(0)] * dim
        e[coord] = Q(-1)
        rows.append(HRow(Vec(tuple(e)), REL_LE if iv.lo_closed else REL_LT, -iv.lo))
    return rows


def _shift_row(row: HRow, offset: int, dim: int) -> HRow:
    coords = [Q(0)] * dim
    for i, c in enumerate(row.normal.coords):
        coords[offset + i] = c
    return HRow(Vec(tuple(coords)), row.rel, row.rhs)


def _coordinate_bounds(
    rows: Sequence[HRow], coord: int
) -> tuple[ExtQ, bool, ExtQ, bool]:
    """Tightest (lo, lo_strict, hi, hi_strict) a row system puts on one coord."""
    lo: ExtQ = NEG_INF
    lo_strict = True
    hi: ExtQ = POS_INF
    hi_strict = True
    for row in rows:
        a = row.normal[coord]
        if a == 0:
            continue
        bound = row.rhs / a
        if row.rel == REL_EQ:
            if ext_lt(lo, bound):
                lo, lo_strict = bound, False
            if ext_lt(bound, hi):
                hi, hi_strict = bound, False
            continue
        strict = row.rel == REL_LT
        if a > 0:
            if ext_lt(bound, hi) or (bound == hi and strict):
                hi, hi_strict = bound, strict
        else:
            if ext_lt(lo, bound) or (bound == lo and strict):
                lo, lo_strict = bound, strict
    return lo, lo_strict, hi, hi_strict


def _cell_feasibility(cell: Cell) -> tuple[Optional[bool], Optional[Vec]]:
    """(nonempty, witness).  nonempty None means undecidable in this class;
    witness None with nonempty True means no rational witness was found."""
    if not cell.epis:
        res = lp_feasible(HPolyhedron(cell.rows, cell.dim))
        return res.feasible, res.witness
    epi_coords = set()
    for e in cell.epis:
        if e.y_dim in epi_coords:
            return None, None  # two epigraph constraints on one value coord
        epi_coords.add(e.y_dim)
    for e in cell.epis:
        epi_coords.add(e.x_dim)
    base_rows = []
    for row in cell.rows:
        support = [i for i, c in enumerate(row.normal.coords) if c != 0]
        touched = [i for i in support if i in epi_coords]
        if not touched:
            base_rows.append(row)
        elif len(support) > 1:
            return None, None  # epigraph coordinate coupled to other vars
    # Per-epi value-window condition, then grouped argument analysis.
    x_conditions: dict[int, list[tuple[PQFunction, Fraction, bool]]] = {}
    y_windows: dict[int, tuple[ExtQ, bool, ExtQ, bool]] = {}
    for e in cell.epis:
        ylo, ylo_s, yhi, yhi_s = _coordinate_bounds(cell.rows, e.y_dim)
        y_windows[e.y_dim] = (ylo, ylo_s, yhi, yhi_s)
        if ext_lt(yhi, ylo) or (ylo == yhi and (ylo_s or yhi_s)):
            return False, None
        if is_finite(yhi):
            x_conditions.setdefault(e.x_dim, []).append((e.fn, yhi, yhi_s))
        else:
            x_conditions.setdefault(e.x_dim, [])
    picked_x: dict[int, Fraction] = {}
    for xd, conds in x_conditions.items():
        xlo, xlo_s, xhi, xhi_s = _coordinate_bounds(cell.rows, xd)
        groups = [[QInterval.of_rationals(xlo, xlo_s, xhi, xhi_s)]]
        for fn, level, strict in conds:
            groups.append(pq_sublevel(fn, level, strict))
        pieces = qint_list_intersect(groups)
        if not pieces:
            return False, None
        choice = None
        for piece in pieces:
            choice = qint_pick_rational(piece)
            if choice is not None:
                break
        if choice is None:
            return True, None  # nonempty, but only at irrational points
        picked_x[xd] = choice
    res = lp_feasible(HPolyhedron(tuple(base_rows), cell.dim))
    if not res.feasible:
        return False, None
    coords = list(res.witness.coords)
    for xd, xval in picked_x.items():
        coords[xd] = xval
    for e in cell.epis:
        ylo, ylo_s, yhi, yhi_s = y_windows[e.y_dim]
        fx = e.fn.value(coords[e.x_dim])
        lo2, lo2_s = (fx, False)
        if ext_lt(fx, ylo) or (fx == ylo and ylo_s):
            lo2, lo2_s = ylo, ylo_s
        yval = _pick_in_rational_interval(lo2, lo2_s, yhi, yhi_s)
        if yval is None:
            return True, None
        coords[e.y_dim] = yval
    return True, Vec(tuple(coords))


def _pick_in_rational_interval(
    lo: ExtQ, lo_strict: bool, hi: ExtQ, hi_strict: bool
) -> Optional[Fraction]:
    if ext_lt(hi, lo):
        return None
    if lo == hi:
        if lo_strict or hi_strict or not is_finite(lo):
            return None
        return lo
    if not is_finite(lo) and not is_finite(hi):
        return Q(0)
    if not is_finite(lo):
        return hi - 1 if hi_strict else hi
    if not is_finite(hi):
        return lo + 1 if lo_strict else lo
    if not lo_strict:
        return lo
    if not hi_strict:
        return hi
    return (lo + hi) / 2


def intersection_nonempty(
    sets: Sequence[SetExpr], extra_rows: Sequence[HRow] = ()
) -> tuple[Optional[bool], Optional[Vec]]:
    """Exact nonemptiness of an intersection, with witness when rational.

    Returns (True, point) / (False, None) / (None, None) when the instance
    leaves the decidable class (reported, never guessed).
    """
    if not sets:
        raise MalformedInputError("empty intersection query")
    dim = sets[0].dim
    for s in sets:
        if s.dim != dim:
            raise DimensionMismatchError("intersection dims differ")
    combos: list[Cell] = [Cell(dim, tuple(extra_rows), ())]
    for s in sets:
        scells = cells(s)
        nxt = []
        for base in combos:
            for c in scells:
                nxt.append(Cell(dim, base.rows + c.rows, base.epis + c.epis))
        combos = nxt
        if not combos:
            return False, None
    saw_unknown = False
    for cell in combos:
        nonempty, witness = _cell_feasibility(cell)
        if nonempty is None:
            saw_unknown = True
        elif nonempty:
            return True, witness
    return (None, None) if saw_unknown else (False, None)


# ---------------------------------------------------------------------------
# Membership, emptiness, closure, translation.


def contains(s: SetExpr, x: Vec) -> bool:
    if x.dim != s.dim:
        raise DimensionMismatchError("point dim mismatch")
    if isinstance(s, PolyhedronSet):
        return s.poly.contains(x)
    if isinstance(s, SingletonSet):
        return s.point == x
    if isinstance(s, IntervalSet):
        v = x[0]
        if is_finite(s.lo):
            if v < s.lo or (v == s.lo and not s.lo_closed):
                return False
        if is_finite(s.hi):
            if v > s.hi or (v == s.hi and not s.hi_closed):
                return False
        return True
    if isinstance(s, EpigraphSet):
        return x[1] >= s.fn.value(x[0])
    if isinstance(s, UnionSet):
        return any(contains(m, x) for m in s.members)
    if isinstance(s, ProductSet):
        start = 0
        for f in s.factors:
            if not contains(f, x.block(start, f.dim)):
                return False
            start += f.dim
        return True
    raise MalformedInputError(f"unknown set expression {type(s).__name__}")


def is_empty(s: SetExpr) -> bool:
    if isinstance(s, (SingletonSet, IntervalSet, EpigraphSet)):
        return False
    if isinstance(s, PolyhedronSet):
        return not lp_feasible(s.poly).feasible
    if isinstance(s, UnionSet):
        return all(is_empty(m) for m in s.members)
    if isinstance(s, ProductSet):
        return any(is_empty(f) for f in s.factors)
    raise MalformedInputError(f"unknown set expression {type(s).__name__}")


def closure(s: SetExpr) -> SetExpr:
    if isinstance(s, PolyhedronSet):
        if not s.poly.has_strict_rows():
            return s
        if is_empty(s):
            # An empty open cell may have a nonempty row-closure.
            return empty_set(s.dim)
        return PolyhedronSet(s.poly.closure())
    if isinstance(s, (SingletonSet, EpigraphSet)):
        return s
    if isinstance(s, IntervalSet):
        return IntervalSet(s.lo, is_finite(s.lo), s.hi, is_finite(s.hi))
    if isinstance(s, UnionSet):
        return UnionSet(tuple(closure(m) for m in s.members), s.dim)
    if isinstance(s, ProductSet):
        return ProductSet(tuple(closure(f) for f in s.factors))
    raise MalformedInputError(f"unknown set expression {type(s).__name__}")


def translate(s: SetExpr, v: Vec) -> SetExpr:
    if v.dim != s.dim:
        raise DimensionMismatchError("translation dim mismatch")
    if isinstance(s, PolyhedronSet):
        return PolyhedronSet(s.poly.translate(v))
    if isinstance(s, SingletonSet):
        return SingletonSet(s.point + v)
    if isinstance(s, IntervalSet):
        t = v[0]
        lo = s.lo if isinstance(s.lo, _Infinity) else s.lo + t
        hi = s.hi if isinstance(s.hi, _Infinity) else s.hi + t
        return IntervalSet(lo, s.lo_closed, hi, s.hi_closed)
    if isinstance(s, EpigraphSet):
        return EpigraphSet(s.fn.translate(v[0], v[1]))
    if isinstance(s, UnionSet):
        return UnionSet(tuple(translate(m, v) for m in s.members), s.dim)
    if isinstance(s, ProductSet):
        out, start = [], 0
        for f in s.factors:
            out.append(translate(f, v.block(start, f.dim)))
            start += f.dim
        return ProductSet(tuple(out))
    raise MalformedInputError(f"unknown set expression {type(s).__name__}")


# ---------------------------------------------------------------------------
# Distances (sup-norm; products decouple blockwise).


def distance(x: Vec, s: SetExpr) -> ExtQ:
    """Exact inf of the sup-norm distance; +inf to the empty set.

    Raises ExactnessError when the value exists but is irrational (possible
    only for epigraphs of genuinely quadratic pieces); the threshold tests
    distance_lt / distance_le stay exact in every case.
    """
    if x.dim != s.dim:
        raise DimensionMismatchError("point dim mismatch")
    if isinstance(s, SingletonSet):
        return (s.point - x).sup_norm()
    if isinstance(s, IntervalSet):
        v = x[0]
        d = Q(0)
        if is_finite(s.lo) and v < s.lo:
            d = s.lo - v
        elif is_finite(s.hi) and v > s.hi:
            d = v - s.hi
        return d
    if isinstance(s, PolyhedronSet):
        if is_empty(s):
            return POS_INF
        return _distance_to_closed_rows(x, s.poly.closure().rows, s.dim)
    if isinstance(s, UnionSet):
        best: ExtQ = POS_INF
        for m in s.members:
            d = distance(x, m)
            if ext_lt(d, best):
                best = d
        return best
    if isinstance(s, ProductSet):
        best: ExtQ = Q(0)
        start = 0
        for f in s.factors:
            d = distance(x.block(start, f.dim), f)
            if ext_lt(best, d):
                best = d
            start += f.dim
        return best
    if isinstance(s, EpigraphSet):
        return _epigraph_distance(x, s.fn)
    raise MalformedInputError(f"unknown set expression {type(s).__name__}")


def _distance_to_closed_rows(x: Vec, rows, dim: int) -> Fraction:
    # minimise t subject to   rows(u),  |u_i - x_i| <= t
    n = dim
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for row in rows:
        coeffs = list(row.normal.coords) + [Q(0)]
        if row.rel == REL_EQ:
            a_eq.append(coeffs)
            b_eq.append(row.rhs)
        else:
            a_ub.append(coeffs)
            b_ub.append(row.rhs)
    for i in range(n):
        e = [Q(0)] * (n + 1)
        e[i], e[n] = Q(1), Q(-1)
        a_ub.append(e)
        b_ub.append(x[i])
        e2 = [Q(0)] * (n + 1)
        e2[i], e2[n] = Q(-1), Q(-1)
        a_ub.append(e2)
        b_ub.append(-x[i])
    c = [Q(0)] * (n + 1)
    c[n] = Q(1)
    from .lp import LPStatus, solve_lp

    res = solve_lp(c, a_ub, b_ub, a_eq, b_eq)
    assert res.status is LPStatus.OPTIMAL
    return res.value


def _epigraph_distance(p: Vec, fn: PQFunction) -> Fraction:
    a, b = p[0], p[1]
    if b >= fn.value(a):
        return Q(0)
    # d = inf_x max(|x - a|, max(0, fn(x) - b)); minimisers sit at rational
    # candidates or at crossings of the two branches (quadratic irrationals).
    candidates: list[QuadIrr] = [QuadIrr.of(a)]
    for bp in fn.breakpoints:
        candidates.append(QuadIrr.of(bp))
    for i, (a2, a1, a0) in enumerate(fn.pieces):
        if a2 != 0:
            candidates.append(QuadIrr.of(-a1 / (2 * a2)))
        # crossings fn(x) - b = +-(x - a) and fn(x) - b = 0
        for extra in (
            (a2, a1 - 1, a0 - b + a),
            (a2, a1 + 1, a0 - b - a),
            (a2, a1, a0 - b),
        ):
            candidates.extend(_quadratic_roots(*extra))
    best: QuadIrr | None = None
    for x in candidates:
        val = _epi_objective(x, a, b, fn)
        if best is None or qi_cmp(val, best) < 0:
            best = val
    assert best is not None
    if best.is_rational():
        return best.rational_value()
    raise ExactnessError(
        "sup-norm distance to this epigraph is irrational; "
        "use distance_lt/distance_le for exact threshold decisions"
    )


def _quadratic_roots(a2: Fraction, a1: Fraction, a0: Fraction) -> list[QuadIrr]:
    if a2 == 0:
        if a1 == 0:
            return []
        return [QuadIrr.of(-a0 / a1)]
    disc = a1 * a1 - 4 * a2 * a0
    if disc < 0:
        return []
    half = Q(1, 2) / a2
    return [
        QuadIrr.make(-a1 * half, -abs(half), disc),
        QuadIrr.make(-a1 * half, abs(half), disc),
    ]


def _epi_objective(x: QuadIrr, a: Fraction, b: Fraction, fn: PQFunction) -> QuadIrr:
    # |x - a|
    diff = QuadIrr.make(x.a - a, x.b, x.r)
    if diff.sign() < 0:
        diff = -diff
    # fn(x) - b on the piece that contains x (pieces agree at breakpoints)
    idx = 0
    for i, bp in enumerate(fn.breakpoints):
        if qi_cmp(x, QuadIrr.of(bp)) <= 0:
            idx = i
            break
    else:
        idx = len(fn.pieces) - 1
    a2, a1, a0 = fn.pieces[idx]
    # fn(x) = a2 x^2 + a1 x + a0 with x = p + q sqrt(r)
    p_, q_, r_ = x.a, x.b, x.r
    val = QuadIrr.make(
        a2 * (p_ * p_ + q_ * q_ * r_) + a1 * p_ + a0 - b,
        2 * a2 * p_ * q_ + a1 * q_,
        r_,
    )
    if val.sign() < 0:
        val = QuadIrr.of(Q(0))
    if val.is_rational() and diff.is_rational():
        return val if val.a > diff.a else diff
    return val if qi_cmp(diff, val) <= 0 else diff


def distance_lt(x: Vec, s: SetExpr, r: ExtQ) -> bool:
    """Exact test  d(x, S) < r."""
    if isinstance(r, _Infinity):
        return r.sign > 0 and not is_empty(s)
    if r <= 0:
        return False
    nonempty, _ = intersection_nonempty([s], box_rows(x, r, strict=True))
    assert nonempty is not None
    return nonempty


def distance_le(x: Vec, s: SetExpr, r: ExtQ) -> bool:
    """Exact test  d(x, S) <= r."""
    if isinstance(r, _Infinity):
        return r.sign > 0 and not is_empty(s)
    if r < 0:
        return False
    if is_empty(s):
        return False
    nonempty, _ = intersection_nonempty([closure(s)], box_rows(x, r, strict=False))
    assert nonempty is not None
    return nonempty


def set_within_halfspaces(s: SetExpr, rows: Sequence[HRow]) -> Optional[bool]:
    """Exact inclusion of s in {x : rows}, via emptiness of s and each
    complemented row.  None when an emptiness query is unsupported."""
    for row in rows:
        for comp in _complement_rows(row):
            nonempty, _ = intersection_nonempty([s], [comp])
            if nonempty is None:
                return None
            if nonempty:
                return False
    return True


def _complement_rows(row: HRow) -> list[HRow]:
    if row.rel == REL_LE:
        return [HRow(-row.normal, REL_LT, -row.rhs)]
    if row.rel == REL_LT:
        return [HRow(-row.normal, REL_LE, -row.rhs)]
    return [
        HRow(row.normal, REL_LT, row.rhs),
        HRow(-row.normal, REL_LT, -row.rhs),
    ]


# ---------------------------------------------------------------------------
# 1-D interval algebra used by the fast checker paths.


def as_interval(s: SetExpr) -> Optional[Union[IntervalSet, UnionSet]]:
    """Normalise a 1-D set to an IntervalSet (or empty UnionSet) if possible."""
    if s.dim != 1:
        return None
    if isinstance(s, IntervalSet):
        return s
    if isinstance(s, SingletonSet):
        return IntervalSet.point(s.point[0])
    if isinstance(s, UnionSet) and not s.members:
        return s
    if isinstance(s, PolyhedronSet):
        lo, lo_s, hi, hi_s = _coordinate_bounds(s.poly.rows, 0)
        if ext_lt(hi, lo) or (lo == hi and (lo_s or hi_s)):
            return empty_set(1)
        if lo == hi:
            return IntervalSet(lo, True, hi, True)
        return IntervalSet(lo, not lo_s and is_finite(lo), hi, not hi_s and is_finite(hi))
    return None


def interval_list(s: SetExpr) -> Optional[list[IntervalSet]]:
    """A 1-D set as a list of intervals, or None outside that class."""
    if s.dim != 1:
        return None
    if isinstance(s, UnionSet):
        out: list[IntervalSet] = []
        for m in s.members:
            part = interval_list(m)
            if part is None:
                return None
            out.extend(part)
        return out
    iv = as_interval(s)
    if iv is None:
        return None
    return [] if isinstance(iv, UnionSet) else [iv]


def union_of_intervals(parts: list[IntervalSet]) -> SetExpr:
    if not parts:
        return empty_set(1)
    if len(parts) == 1:
        return parts[0]
    return UnionSet(tuple(parts), 1)


def intersect_1d(a: SetExpr, b: SetExpr) -> SetExpr:
    """Exact intersection of two 1-D interval-union sets."""
    la, lb = interval_list(a), interval_list(b)
    if la is None or lb is None:
        raise MalformedInputError("intersect_1d outside the interval class")
    out = []
    for x in la:
        for y in lb:
            m = interval_intersect(x, y)
            if m is not None:
                out.append(m)
    return union_of_intervals(out)


def complement_1d(s: SetExpr) -> SetExpr:
    """Exact complement of a 1-D interval-union set."""
    parts = interval_list(s)
    if parts is None:
        raise MalformedInputError("complement_1d outside the interval class")
    result: list[IntervalSet] = [IntervalSet.whole_line()]
    for iv in parts:
        pieces: list[IntervalSet] = []
        if is_finite(iv.lo):
            pieces.append(IntervalSet(NEG_INF, False, iv.lo, not iv.lo_closed))
        if is_finite(iv.hi):
            pieces.append(IntervalSet(iv.hi, not iv.hi_closed, POS_INF, False))
        nxt: list[IntervalSet] = []
        for cur in result:
            for p in pieces:
                m = interval_intersect(cur, p)
                if m is not None:
                    nxt.append(m)
        result = nxt
    return union_of_intervals(result)


def subset_1d(a: SetExpr, b: SetExpr) -> bool:
    """Exact inclusion test for 1-D interval-union sets."""
    inter = intersect_1d(a, complement_1d(b))
    return is_empty(inter)


def interval_intersect(a: IntervalSet, b: IntervalSet) -> Optional[IntervalSet]:
    """Intersection of two intervals, or None when empty."""
    lo, lo_c = a.lo, a.lo_closed
    if ext_lt(lo, b.lo):
        lo, lo_c = b.lo, b.lo_closed
    elif lo == b.lo:
        lo_c = lo_c and b.lo_closed
    hi, hi_c = a.hi, a.hi_closed
    if ext_lt(b.hi, hi):
        hi, hi_c = b.hi, b.hi_closed
    elif hi == b.hi:
        hi_c = hi_c and b.hi_closed
    if ext_lt(hi, lo):
        return None
    if lo == hi:
        if is_finite(lo) and lo_c and hi_c:
            return IntervalSet(lo, True, hi, True)
        return None
    return IntervalSet(lo, lo_c, hi, hi_c)
