"""H-polyhedra with mixed strict/non-strict rows, over exact rationals.

Strict rows make the represented convex set relatively open along some
facets.  Feasibility with strict rows is decided by the max-slack
reduction: maximise t subject to the strict rows tightened by t; the
system is feasible iff the optimum is positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, MalformedInputError
from .lp import LPResult, LPStatus, solve_lp
from .rationals import Q
from .vectors import Vec

REL_LE = "<="
REL_LT = "<"
REL_EQ = "=="
_RELS = (REL_LE, REL_LT, REL_EQ)


@dataclass(frozen=True)
class HRow:
    normal: Vec
    rel: str
    rhs: Fraction

    def __post_init__(self):
        if self.rel not in _RELS:
            raise MalformedInputError(f"unknown relation {self.rel!r}")

    @staticmethod
    def of(coeffs, rel: str, rhs) -> "HRow":
        return HRow(Vec.from_seq(coeffs), rel, Q(rhs))

    def holds_at(self, x: Vec) -> bool:
        lhs = self.normal.dot(x)
        if self.rel == REL_LE:
            return lhs <= self.rhs
        if self.rel == REL_LT:
            return lhs < self.rhs
        return lhs == self.rhs

    def closed(self) -> "HRow":
        return HRow(self.normal, REL_LE, self.rhs) if self.rel == REL_LT else self


@dataclass(frozen=True)
class HPolyhedron:
    rows: tuple[HRow, ...]
    dim: int

    def __post_init__(self):
        for row in self.rows:
            if row.normal.dim != self.dim:
                raise DimensionMismatchError(
                    f"row dim {row.normal.dim} in a {self.dim}-dim polyhedron"
                )

    @staticmethod
    def of(dim: int, rows) -> "HPolyhedron":
        return HPolyhedron(tuple(rows), dim)

    @staticmethod
    def whole_space(dim: int) -> "HPolyhedron":
        return HPolyhedron((), dim)

    def contains(self, x: Vec) -> bool:
        if x.dim != self.dim:
            raise DimensionMismatchError("point dim mismatch")
        return all(row.holds_at(x) for row in self.rows)

    def closure(self) -> "HPolyhedron":
        return HPolyhedron(tuple(r.closed() for r in self.rows), self.dim)

    def has_strict_rows(self) -> bool:
        return any(r.rel == REL_LT for r in self.rows)

    def translate(self, v: Vec) -> "HPolyhedron":
        return HPolyhedron(
            tuple(
                HRow(r.normal, r.rel, r.rhs + r.normal.dot(v)) for r in self.rows
            ),
            self.dim,
        )

    def intersect(self, other: "HPolyhedron") -> "HPolyhedron":
        if other.dim != self.dim:
            raise DimensionMismatchError("polyhedron dims differ")
        return HPolyhedron(self.rows + other.rows, self.dim)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    witness: Vec | None


def lp_feasible(poly: HPolyhedron) -> FeasibilityResult:
    """Exact feasibility of the system including its strict rows."""
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    strict_present = poly.has_strict_rows()
    n = poly.dim
    ncols = n + 1 if strict_present else n
    for row in poly.rows:
        coeffs = list(row.normal.coords) + ([Q(0)] if strict_present else [])
        if row.rel == REL_EQ:
            a_eq.append(coeffs)
            b_eq.append(row.rhs)
            continue
        if row.rel == REL_LT:
            coeffs[n] = Q(1)
        a_ub.append(coeffs)
        b_ub.append(row.rhs)
    if not strict_present:
        res = solve_lp([Q(0)] * ncols, a_ub, b_ub, a_eq, b_eq)
        if res.status is LPStatus.INFEASIBLE:
            return FeasibilityResult(False, None)
        return FeasibilityResult(True, Vec(res.x[:n]))
    # max t, strict rows tightened by t, t capped at 1
    cap = [Q(0)] * ncols
    cap[n] = Q(1)
    a_ub.append(cap)
    b_ub.append(Q(1))
    c = [Q(0)] * ncols
    c[n] = Q(1)
    res = solve_lp(c, a_ub, b_ub, a_eq, b_eq, maximize=True)
    if res.status is LPStatus.INFEASIBLE or res.value is None or res.value <= 0:
        return FeasibilityResult(False, None)
    return FeasibilityResult(True, Vec(res.x[:n]))


def optimize_closed(poly: HPolyhedron, objective: Vec, maximize: bool) -> LPResult:
    """Optimize a linear functional over the closure of the polyhedron."""
    closed = poly.closure()
    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for row in closed.rows:
        if row.rel == REL_EQ:
            a_eq.append(list(row.normal.coords))
            b_eq.append(row.rhs)
        else:
            a_ub.append(list(row.normal.coords))
            b_ub.append(row.rhs)
    return solve_lp(list(objective.coords), a_ub, b_ub, a_eq, b_eq, maximize=maximize)


def box_rows(center: Vec, radius: Fraction, strict: bool) -> list[HRow]:
    """Rows of the sup-norm ball around center (open if strict)."""
    rel = REL_LT if strict else REL_LE
    rows = []
    n = center.dim
    for i in range(n):
        e = [Q(0)] * n
        e[i] = Q(1)
        rows.append(HRow(Vec(tuple(e)), rel, center[i] + radius))
        e2 = [Q(0)] * n
        e2[i] = Q(-1)
        rows.append(HRow(Vec(tuple(e2)), rel, radius - center[i]))
    return rows


def fm_project(poly: HPolyhedron, keep: list[int]) -> HPolyhedron:
    """Fourier-Motzkin projection onto the listed coordinates (in order).

    Equality rows are used as Gaussian pivots; strictness propagates to the
    combined rows so the projection of a set with open facets stays exact.
    """
    keep_set = set(keep)
    rows = list(poly.rows)
    for drop in [i for i in range(poly.dim) if i not in keep_set]:
        eq_pivot = next(
            (r for r in rows if r.rel == REL_EQ and r.normal[drop] != 0), None
        )
        new_rows: list[HRow] = []
        if eq_pivot is not None:
            p = eq_pivot.normal[drop]
            for r in rows:
                if r is eq_pivot or r.normal[drop] == 0:
                    if r is not eq_pivot:
                        new_rows.append(r)
                    continue
                f = r.normal[drop] / p
                normal = r.normal - eq_pivot.normal.scale(f)
                new_rows.append(HRow(normal, r.rel, r.rhs - f * eq_pivot.rhs))
        else:
            pos = [r for r in rows if r.normal[drop] > 0 and r.rel != REL_EQ]
            neg = [r for r in rows if r.normal[drop] < 0 and r.rel != REL_EQ]
            new_rows = [r for r in rows if r.normal[drop] == 0]
            for rp in pos:
                for rn in neg:
                    ap, an = rp.normal[drop], -rn.normal[drop]
                    normal = rp.normal.scale(an) + rn.normal.scale(ap)
                    rhs = an * rp.rhs + ap * rn.rhs
                    rel = REL_LT if REL_LT in (rp.rel, rn.rel) else REL_LE
                    new_rows.append(HRow(normal, rel, rhs))
        rows = [r for r in new_rows if not _is_trivial(r, drop)]
    # Re-index the kept coordinates.
    out = []
    for r in rows:
        coords = tuple(r.normal[i] for i in keep)
        out.append(HRow(Vec(coords), r.rel, r.rhs))
    return HPolyhedron(tuple(out), len(keep))


def _is_trivial(row: HRow, dropped: int) -> bool:
    if row.normal[dropped] != 0:
        raise AssertionError("elimination left a live coefficient")
    if not row.normal.is_zero():
        return False
    # 0 <= rhs style rows: keep only genuinely infeasible ones.
    if row.rel == REL_EQ:
        return row.rhs == 0
    if row.rel == REL_LE:
        return row.rhs >= 0
    return row.rhs > 0
