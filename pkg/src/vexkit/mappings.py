"""Set-valued mappings with finitely represented graphs.

Supported classes: epigraphical mappings F(x) = [phi(x), +inf) over the
line, mappings with polyhedral graphs, and finite products sharing one
argument.  Graphs of the first two classes are set expressions, so all
cone calculus applies to them directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    MalformedInputError,
    UnsupportedClassError,
)
from .polyhedra import HPolyhedron, fm_project, lp_feasible
from .pqfunctions import PQFunction, pq_inf
from .rationals import NEG_INF, POS_INF, Q, _Infinity, is_finite
from .sets import (
    EpigraphSet,
    IntervalSet,
    PolyhedronSet,
    ProductSet,
    SetExpr,
    SingletonSet,
    UnionSet,
    as_interval,
    contains,
    empty_set,
    whole_space,
)
from .vectors import Vec


class MappingExpr:
    x_dim: int
    y_dim: int


@dataclass(frozen=True)
class EpigraphicalMap(MappingExpr):
    fn: PQFunction

    x_dim = 1
    y_dim = 1


@dataclass(frozen=True)
class PolyhedralGraphMap(MappingExpr):
    graph: HPolyhedron
    dx: int
    dy: int

    def __post_init__(self):
        if self.graph.dim != self.dx + self.dy:
            raise DimensionMismatchError("graph dim must be dx + dy")

    @property
    def x_dim(self) -> int:
        return self.dx

    @property
    def y_dim(self) -> int:
        return self.dy


@dataclass(frozen=True)
class ProductMap(MappingExpr):
    components: tuple[MappingExpr, ...]

    def __post_init__(self):
        if not self.components:
            raise MalformedInputError("empty product mapping")
        if len({c.x_dim for c in self.components}) != 1:
            raise DimensionMismatchError("product components must share X")

    @property
    def x_dim(self) -> int:
        return self.components[0].x_dim

    @property
    def y_dim(self) -> int:
        return sum(c.y_dim for c in self.components)


def graph_set(f: MappingExpr) -> SetExpr:
    """The graph as a set expression (epigraphical / polyhedral classes)."""
    if isinstance(f, EpigraphicalMap):
        return EpigraphSet(f.fn)
    if isinstance(f, PolyhedralGraphMap):
        return PolyhedronSet(f.graph)
    raise UnsupportedClassError(
        "graphs of product mappings couple factors through the shared argument"
    )


def in_graph(f: MappingExpr, x: Vec, y: Vec) -> bool:
    if isinstance(f, ProductMap):
        start = 0
        for comp in f.components:
            if not in_graph(comp, x, y.block(start, comp.y_dim)):
                return False
            start += comp.y_dim
        return True
    return contains(graph_set(f), x.concat(y))


def evaluate(f: MappingExpr, x: Vec) -> SetExpr:
    """F(x) as a set expression (possibly empty)."""
    if x.dim != f.x_dim:
        raise DimensionMismatchError("argument dim mismatch")
    if isinstance(f, EpigraphicalMap):
        return IntervalSet(f.fn.value(x[0]), True, POS_INF, False)
    if isinstance(f, PolyhedralGraphMap):
        sliced = _fix_leading_coords(f.graph, x)
        if not lp_feasible(sliced).feasible:
            return empty_set(f.dy)
        iv = as_interval(PolyhedronSet(sliced)) if f.dy == 1 else None
        return iv if iv is not None else PolyhedronSet(sliced)
    if isinstance(f, ProductMap):
        return ProductSet(tuple(evaluate(c, x) for c in f.components))
    raise UnsupportedClassError(f"unknown mapping class {type(f).__name__}")


def _fix_leading_coords(poly: HPolyhedron, x: Vec) -> HPolyhedron:
    from .polyhedra import HRow

    n = x.dim
    rows = []
    for row in poly.rows:
        shift = sum((row.normal[i] * x[i] for i in range(n)), Q(0))
        tail = Vec(row.normal.coords[n:])
        rows.append(HRow(tail, row.rel, row.rhs - shift))
    return HPolyhedron(tuple(rows), poly.dim - n)


def image_of(f: MappingExpr, domain: SetExpr) -> SetExpr:
    """Exact image F(domain) for epigraphical mappings over interval domains."""
    if not isinstance(f, EpigraphicalMap):
        raise UnsupportedClassError("image_of supports epigraphical mappings")
    if domain.dim != 1:
        raise DimensionMismatchError("epigraphical domain must be 1-D")
    windows = _interval_windows(domain)
    if not windows:
        return empty_set(1)
    best: tuple | None = None
    for lo, lo_open, hi, hi_open in windows:
        value, attained = pq_inf(f.fn, lo, lo_open, hi, hi_open)
        if best is None or _lower_image(value, attained, best):
            best = (value, attained)
    value, attained = best
    if isinstance(value, _Infinity):
        return IntervalSet.whole_line()
    return IntervalSet(value, attained, POS_INF, False)


def _lower_image(value, attained, best) -> bool:
    bval, batt = best
    from .rationals import ext_lt

    if ext_lt(value, bval):
        return True
    return value == bval and attained and not batt


def _interval_windows(domain: SetExpr) -> list[tuple]:
    """Decompose a 1-D set into (lo, lo_open, hi, hi_open) windows."""
    if isinstance(domain, UnionSet):
        out = []
        for m in domain.members:
            out.extend(_interval_windows(m))
        return out
    iv = as_interval(domain)
    if iv is None:
        raise UnsupportedClassError("domain is not a finite union of intervals")
    if isinstance(iv, UnionSet):
        return []
    return [(iv.lo, not iv.lo_closed, iv.hi, not iv.hi_closed)]


def polyhedral_image(f: PolyhedralGraphMap, domain: HPolyhedron) -> HPolyhedron:
    """Projection of gph F restricted to a polyhedral domain onto Y."""
    if domain.dim != f.dx:
        raise DimensionMismatchError("domain dim mismatch")
    lifted_rows = []
    from .polyhedra import HRow

    total = f.dx + f.dy
    for row in domain.rows:
        coords = list(row.normal.coords) + [Q(0)] * f.dy
        lifted_rows.append(HRow(Vec(tuple(coords)), row.rel, row.rhs))
    joint = HPolyhedron(f.graph.rows + tuple(lifted_rows), total)
    return fm_project(joint, list(range(f.dx, total)))


def domain_of(f: MappingExpr) -> SetExpr:
    """dom F = {x : F(x) nonempty}, exact for the supported classes."""
    if isinstance(f, EpigraphicalMap):
        return IntervalSet.whole_line()
    if isinstance(f, PolyhedralGraphMap):
        proj = fm_project(f.graph, list(range(f.dx)))
        if f.dx == 1:
            iv = as_interval(PolyhedronSet(proj))
            if iv is not None:
                return iv
        return PolyhedronSet(proj)
    if isinstance(f, ProductMap):
        doms = [domain_of(c) for c in f.components]
        out = doms[0]
        for d in doms[1:]:
            if isinstance(out, IntervalSet) and isinstance(d, IntervalSet):
                from .sets import interval_intersect

                merged = interval_intersect(out, d)
                out = merged if merged is not None else empty_set(1)
            else:
                raise UnsupportedClassError("product domain outside interval class")
        return out
    raise UnsupportedClassError(f"unknown mapping class {type(f).__name__}")
