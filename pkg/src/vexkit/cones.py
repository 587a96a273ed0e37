"""Finitely generated convex cones and exact tangent/normal cone calculus.

Cones carry generators + lineality (V-form) and homogeneous rows (H-form);
conversion between the two is the double description method over exact
rationals.  Normal cones are computed in closed form per supported set
class; nonconvex contingent sectors at concave kinks are handled by
intersecting the polars of their convex cells.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DimensionMismatchError,
    MalformedInputError,
    NotInGraphError,
    NotInSetError,
    UnsupportedClassError,
)
from .lp import LPStatus, solve_lp
from .polyhedra import REL_EQ, REL_LE, REL_LT, HPolyhedron, HRow
from .pqfunctions import PQFunction
from .rationals import Q
from .sets import (
    EpigraphSet,
    IntervalSet,
    PolyhedronSet,
    ProductSet,
    SetExpr,
    SingletonSet,
    UnionSet,
    closure,
    contains,
    _coordinate_bounds,
)
from .rationals import is_finite
from .vectors import Vec


class ConeFlavor(Enum):
    FRECHET = "frechet"
    CLARKE = "clarke"
    CONVEX = "convex"


HCone = tuple[tuple[Vec, bool], ...]  # (normal, is_equality); rows a.x <= 0 / = 0


def _primitive(v: Vec) -> Vec:
    den = 1
    for c in v.coords:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in v.coords]
    g = 0
    for i in ints:
        g = math.gcd(g, abs(i))
    if g == 0:
        return Vec.zero(v.dim)
    return Vec(tuple(Q(i, g) for i in ints))


def _sign_canonical(v: Vec) -> Vec:
    for c in v.coords:
        if c != 0:
            return v if c > 0 else -v
    return v


def dd_cone(rows: Sequence[tuple[Vec, bool]], dim: int) -> tuple[list[Vec], list[Vec]]:
    """Rays and lineality of {x : a.x <= 0 (ineq rows), a.x = 0 (eq rows)}."""
    lineality: list[Vec] = []
    for i in range(dim):
        e = [Q(0)] * dim
        e[i] = Q(1)
        lineality.append(Vec(tuple(e)))
    rays: list[tuple[Vec, frozenset]] = []
    for idx, (a, is_eq) in enumerate(rows):
        if a.dim != dim:
            raise DimensionMismatchError("cone row dim mismatch")
        lvals = [a.dot(l) for l in lineality]
        pivot = next((i for i, v in enumerate(lvals) if v != 0), None)
        if pivot is not None:
            l0 = lineality[pivot]
            if a.dot(l0) > 0:
                l0 = -l0
            d0 = a.dot(l0)
            lineality = [
                l - l0.scale(a.dot(l) / d0)
                for i, l in enumerate(lineality)
                if i != pivot
            ]
            rays = [
                (r - l0.scale(a.dot(r) / d0), active) for r, active in rays
            ]
            rays = [(r, active | {idx}) for r, active in rays]
            if not is_eq:
                rays.append((l0, frozenset(range(idx))))
            continue
        pos = [(r, act) for r, act in rays if a.dot(r) > 0]
        neg = [(r, act) for r, act in rays if a.dot(r) < 0]
        zero = [(r, act | {idx}) for r, act in rays if a.dot(r) == 0]
        new_rays = list(zero) if is_eq else list(zero) + list(neg)
        all_actives = [act for _, act in rays]
        for rp, actp in pos:
            for rn, actn in neg:
                common = actp & actn
                adjacent = not any(
                    other is not actp and other is not actn and common <= other
                    for other in all_actives
                )
                if not adjacent:
                    continue
                w = _primitive(rn.scale(a.dot(rp)) + rp.scale(-a.dot(rn)))
                if w.is_zero():
                    continue
                new_rays.append((w, frozenset(common | {idx})))
        # Deduplicate parallel rays.
        seen: dict[tuple, frozenset] = {}
        for r, act in new_rays:
            key = _primitive(r).coords
            seen[key] = seen.get(key, frozenset()) | act
        rays = [(Vec(k), act) for k, act in seen.items()]
    out_rays = [
        _primitive(r)
        for r, _ in rays
        if not _primitive(r).is_zero() and not _in_span(_primitive(r), lineality)
    ]
    # Opposite ray pairs form lines; fold them into the lineality.
    folded = True
    while folded:
        folded = False
        keys = {r.coords: i for i, r in enumerate(out_rays)}
        for i, r in enumerate(out_rays):
            j = keys.get(_primitive(-r).coords)
            if j is not None and j != i:
                lineality.append(r)
                out_rays = [v for k, v in enumerate(out_rays) if k not in (i, j)]
                folded = True
                break
    lin = _reduce_basis(lineality)
    out_rays = [r for r in out_rays if not _in_span(r, lin)]
    out_rays = _drop_redundant_rays(out_rays, lin)
    return sorted(out_rays, key=lambda v: v.coords), lin


def _drop_redundant_rays(rays: list[Vec], lin: list[Vec]) -> list[Vec]:
    """Remove rays that are conic combinations of the remaining generators."""
    rays = [Vec(c) for c in sorted({r.coords for r in rays})]
    kept = list(rays)
    i = 0
    while i < len(kept):
        candidate = kept[i]
        others = kept[:i] + kept[i + 1 :]
        probe = FGCone(candidate.dim, tuple(others), tuple(lin), None)
        if cone_member(probe, candidate):
            kept.pop(i)
        else:
            i += 1
    return kept


def _in_span(v: Vec, basis: list[Vec]) -> bool:
    if not basis:
        return v.is_zero()
    a_eq = [[b[i] for b in basis] for i in range(v.dim)]
    b_eq = list(v.coords)
    res = solve_lp([Q(0)] * len(basis), a_eq=a_eq, b_eq=b_eq)
    return res.status is LPStatus.OPTIMAL


def _reduce_basis(vectors: list[Vec]) -> list[Vec]:
    basis: list[Vec] = []
    for v in vectors:
        if not _in_span(v, basis):
            basis.append(_sign_canonical(_primitive(v)))
    return basis


@dataclass(frozen=True)
class FGCone:
    dim: int
    generators: tuple[Vec, ...]
    lineality: tuple[Vec, ...]
    h_rows: Optional[HCone] = None

    @staticmethod
    def from_generators(
        dim: int, generators: Sequence[Vec] = (), lineality: Sequence[Vec] = ()
    ) -> "FGCone":
        gens = [
            _primitive(g) for g in generators if not _primitive(g).is_zero()
        ]
        lin = _reduce_basis(list(lineality))
        gens = sorted({g.coords for g in gens if not _in_span(g, lin)})
        return FGCone(dim, tuple(Vec(c) for c in gens), tuple(lin), None)

    @staticmethod
    def from_h(dim: int, rows: Sequence[tuple[Vec, bool]]) -> "FGCone":
        rays, lin = dd_cone(rows, dim)
        return FGCone(
            dim,
            tuple(rays),
            tuple(lin),
            tuple((_primitive(a), eq) for a, eq in rows),
        )

    @staticmethod
    def zero(dim: int) -> "FGCone":
        rows = []
        for i in range(dim):
            e = [Q(0)] * dim
            e[i] = Q(1)
            rows.append((Vec(tuple(e)), True))
        return FGCone(dim, (), (), tuple(rows))

    @staticmethod
    def whole(dim: int) -> "FGCone":
        lin = []
        for i in range(dim):
            e = [Q(0)] * dim
            e[i] = Q(1)
            lin.append(Vec(tuple(e)))
        return FGCone(dim, (), tuple(lin), ())

    def is_zero_cone(self) -> bool:
        return not self.generators and not self.lineality

    def with_h(self) -> "FGCone":
        if self.h_rows is not None:
            return self
        # H-rows of the cone are the generators of its polar.
        pol = polar(FGCone(self.dim, self.generators, self.lineality, None))
        rows = tuple(
            [(g, False) for g in pol.generators] + [(l, True) for l in pol.lineality]
        )
        return FGCone(self.dim, self.generators, self.lineality, rows)


def polar(c: FGCone) -> FGCone:
    """Exact polar cone; an involution on closed convex cones."""
    rows = [(g, False) for g in c.generators] + [(l, True) for l in c.lineality]
    rays, lin = dd_cone(rows, c.dim)
    return FGCone(c.dim, tuple(rays), tuple(lin), tuple(rows))


def cone_member(c: FGCone, v: Vec) -> bool:
    """Exact membership: H-row evaluation, else LP over generator weights."""
    if v.dim != c.dim:
        raise DimensionMismatchError("cone member dim mismatch")
    if c.h_rows is not None:
        for a, is_eq in c.h_rows:
            val = a.dot(v)
            if is_eq:
                if val != 0:
                    return False
            elif val > 0:
                return False
        return True
    gens = list(c.generators) + list(c.lineality)
    if not gens:
        return v.is_zero()
    ng = len(c.generators)
    a_eq = [[g[i] for g in gens] for i in range(c.dim)]
    b_eq = list(v.coords)
    a_ub = []
    b_ub = []
    for j in range(ng):
        row = [Q(0)] * len(gens)
        row[j] = Q(-1)
        a_ub.append(row)
        b_ub.append(Q(0))
    res = solve_lp([Q(0)] * len(gens), a_ub, b_ub, a_eq, b_eq)
    return res.status is LPStatus.OPTIMAL


def cone_subset(a: FGCone, b: FGCone) -> bool:
    bb = b.with_h()
    return all(cone_member(bb, g) for g in a.generators) and all(
        cone_member(bb, l) and cone_member(bb, -l) for l in a.lineality
    )


def cone_equal(a: FGCone, b: FGCone) -> bool:
    return cone_subset(a, b) and cone_subset(b, a)


def cone_intersect(a: FGCone, b: FGCone) -> FGCone:
    if a.dim != b.dim:
        raise DimensionMismatchError("cone dims differ")
    rows = list(a.with_h().h_rows) + list(b.with_h().h_rows)
    return FGCone.from_h(a.dim, rows)


def cone_product(parts: Sequence[FGCone]) -> FGCone:
    dim = sum(p.dim for p in parts)
    gens: list[Vec] = []
    lin: list[Vec] = []
    rows: list[tuple[Vec, bool]] = []
    have_rows = all(p.h_rows is not None for p in parts)
    offset = 0
    for p in parts:
        for g in p.generators:
            gens.append(_embed(g, offset, dim))
        for l in p.lineality:
            lin.append(_embed(l, offset, dim))
        if have_rows:
            for a, eq in p.h_rows:
                rows.append((_embed(a, offset, dim), eq))
        offset += p.dim
    return FGCone(
        dim, tuple(gens), tuple(lin), tuple(rows) if have_rows else None
    )


def _embed(v: Vec, offset: int, dim: int) -> Vec:
    coords = [Q(0)] * dim
    for i, c in enumerate(v.coords):
        coords[offset + i] = c
    return Vec(tuple(coords))


# ---------------------------------------------------------------------------
# Tangent and normal cones per supported set class.


def clarke_tangent(s: SetExpr, x: Vec) -> FGCone:
    """Exact Clarke tangent cone for the supported classes."""
    if not contains(s, x):
        raise NotInSetError("tangent cone queried outside the set")
    if isinstance(s, PolyhedronSet):
        return _poly_tangent(s.poly, x)
    if isinstance(s, IntervalSet):
        return _poly_tangent(_interval_poly(s), x)
    if isinstance(s, SingletonSet):
        return FGCone.zero(s.dim)
    if isinstance(s, EpigraphSet):
        if x[1] > s.fn.value(x[0]):
            return FGCone.whole(2)
        sm = s.fn.left_slope(x[0])
        sp = s.fn.right_slope(x[0])
        rows = [
            (Vec.of(sm, -1), False),
            (Vec.of(sp, -1), False),
        ]
        return FGCone.from_h(2, rows)
    if isinstance(s, ProductSet):
        parts = []
        start = 0
        for f in s.factors:
            parts.append(clarke_tangent(f, x.block(start, f.dim)))
            start += f.dim
        return cone_product(parts)
    if isinstance(s, UnionSet):
        live = [m for m in s.members if contains(closure(m), x)]
        if len(live) == 1:
            return clarke_tangent(closure(live[0]), x)
        raise UnsupportedClassError(
            "Clarke tangent cone of a genuine union is not computed in closed form"
        )
    raise UnsupportedClassError(f"unsupported set class {type(s).__name__}")


def _interval_poly(s: IntervalSet) -> HPolyhedron:
    rows = []
    if is_finite(s.hi):
        rows.append(HRow(Vec.of(1), REL_LE if s.hi_closed else REL_LT, s.hi))
    if is_finite(s.lo):
        rows.append(HRow(Vec.of(-1), REL_LE if s.lo_closed else REL_LT, -s.lo))
    return HPolyhedron(tuple(rows), 1)


def _poly_tangent(poly: HPolyhedron, x: Vec) -> FGCone:
    rows = []
    for row in poly.rows:
        val = row.normal.dot(x)
        if row.rel == REL_EQ:
            rows.append((row.normal, True))
        elif val == row.rhs:  # strict rows are never active at a member point
            rows.append((row.normal, False))
    return FGCone.from_h(poly.dim, rows)


def normal_cone(s: SetExpr, x: Vec, flavor: ConeFlavor) -> FGCone:
    """Exact normal cone of the requested flavor; NotInSetError outside."""
    if not contains(s, x):
        raise NotInSetError("normal cone queried outside the set")
    if isinstance(s, SingletonSet):
        return FGCone.whole(s.dim)
    if isinstance(s, (PolyhedronSet, IntervalSet)):
        # Convex cases: all flavors coincide with the active-row cone.
        poly = s.poly if isinstance(s, PolyhedronSet) else _interval_poly(s)
        return _poly_normal(poly, x)
    if isinstance(s, EpigraphSet):
        return _epigraph_normal(s.fn, x, flavor)
    if isinstance(s, ProductSet):
        parts = []
        start = 0
        for f in s.factors:
            parts.append(normal_cone(f, x.block(start, f.dim), flavor))
            start += f.dim
        return cone_product(parts)
    if isinstance(s, UnionSet):
        live = [m for m in s.members if contains(closure(m), x)]
        if not live:
            raise NotInSetError("point in no union member")
        if flavor is not ConeFlavor.FRECHET and len(live) > 1:
            raise UnsupportedClassError(
                "only the Frechet flavor is defined in closed form on unions"
            )
        cones = [normal_cone(closure(m), x, flavor) for m in live]
        out = cones[0]
        for c in cones[1:]:
            out = cone_intersect(out, c)
        return out
    raise UnsupportedClassError(f"unsupported set class {type(s).__name__}")


def _poly_normal(poly: HPolyhedron, x: Vec) -> FGCone:
    gens = []
    lin = []
    for row in poly.rows:
        if row.rel == REL_EQ:
            lin.append(row.normal)
        elif row.normal.dot(x) == row.rhs:
            gens.append(row.normal)
    return FGCone.from_generators(poly.dim, gens, lin).with_h()


def _epigraph_normal(fn: PQFunction, x: Vec, flavor: ConeFlavor) -> FGCone:
    if x[1] > fn.value(x[0]):
        return FGCone.zero(2)
    sm = fn.left_slope(x[0])
    sp = fn.right_slope(x[0])
    if flavor is ConeFlavor.CONVEX:
        if not _pq_convex(fn):
            raise UnsupportedClassError(
                "convex-flavor normal cone on a nonconvex epigraph"
            )
        flavor = ConeFlavor.CLARKE
    if flavor is ConeFlavor.CLARKE or sm == sp:
        return FGCone.from_generators(
            2, [Vec.of(sm, -1), Vec.of(sp, -1)]
        ).with_h()
    # Frechet: polar of the contingent sector, cellwise.
    right = FGCone.from_generators(2, [Vec.of(-1, 0), Vec.of(sp, -1)])
    left = FGCone.from_generators(2, [Vec.of(1, 0), Vec.of(sm, -1)])
    return cone_intersect(right.with_h(), left.with_h())


def _pq_convex(fn: PQFunction) -> bool:
    if any(a2 < 0 for a2, _, _ in fn.pieces):
        return False
    for bp in fn.breakpoints:
        if fn.left_slope(bp) > fn.right_slope(bp):
            return False
    return True


# ---------------------------------------------------------------------------
# Coderivatives.


@dataclass(frozen=True)
class CoderivativeResult:
    """The slice {x* : (x*, -y*) in N_gph(x, y)} of a graph normal cone."""

    kind: str  # empty | point | segment | ray | line | polyhedron
    poly: HPolyhedron
    points: tuple[Vec, ...] = ()
    direction: Optional[Vec] = None

    def member(self, xstar: Vec) -> bool:
        return self.kind != "empty" and self.poly.contains(xstar)

    def as_singleton(self) -> Optional[Vec]:
        return self.points[0] if self.kind == "point" else None


def slice_cone(cone: FGCone, fixed: Vec, head_dim: int) -> CoderivativeResult:
    """{u in R^head : (u, fixed) in cone} as a polyhedron, classified."""
    cone = cone.with_h()
    rows = []
    for a, is_eq in cone.h_rows:
        head = a.block(0, head_dim)
        tail = a.block(head_dim, cone.dim - head_dim)
        rows.append(HRow(head, REL_EQ if is_eq else REL_LE, -tail.dot(fixed)))
    poly = HPolyhedron(tuple(rows), head_dim)
    from .polyhedra import lp_feasible

    if not lp_feasible(poly).feasible:
        return CoderivativeResult("empty", poly)
    if head_dim == 1:
        lo, lo_s, hi, hi_s = _coordinate_bounds(rows, 0)
        if is_finite(lo) and is_finite(hi):
            if lo == hi:
                return CoderivativeResult("point", poly, (Vec.of(lo),))
            return CoderivativeResult(
                "segment", poly, (Vec.of(lo), Vec.of(hi))
            )
        if is_finite(lo):
            return CoderivativeResult(
                "ray", poly, (Vec.of(lo),), Vec.of(1)
            )
        if is_finite(hi):
            return CoderivativeResult(
                "ray", poly, (Vec.of(hi),), Vec.of(-1)
            )
        return CoderivativeResult("line", poly, (Vec.of(0),), Vec.of(1))
    return CoderivativeResult("polyhedron", poly)
