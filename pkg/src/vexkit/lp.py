"""Exact rational linear programming (two-phase simplex, Bland's rule).

Free variables, inequality and equality rows, Fraction arithmetic
throughout.  Problem sizes here are desk scale, so the dense tableau is the
right tool; Bland's rule guarantees termination without any tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .rationals import Q


class LPStatus(Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass
class LPResult:
    status: LPStatus
    x: tuple[Fraction, ...] | None
    value: Fraction | None


Row = Sequence[Fraction]


def _pivot(T: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    piv = T[row][col]
    T[row] = [v / piv for v in T[row]]
    for i, tr in enumerate(T):
        if i != row and tr[col] != 0:
            f = tr[col]
            T[i] = [a - f * b for a, b in zip(tr, T[row])]
    basis[row] = col


def _simplex_min(
    T: list[list[Fraction]], basis: list[int], cost: list[Fraction]
) -> LPStatus:
    """Minimize cost over the tableau in place.  Returns OPTIMAL/UNBOUNDED."""
    ncols = len(cost)
    while True:
        lam = [cost[b] for b in basis]
        entering = -1
        for j in range(ncols):
            rj = cost[j] - sum(
                (lam[i] * T[i][j] for i in range(len(T)) if lam[i] != 0), Q(0)
            )
            if rj < 0:
                entering = j
                break
        if entering < 0:
            return LPStatus.OPTIMAL
        leave, best = -1, None
        for i in range(len(T)):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[i] < basis[leave])
                ):
                    leave, best = i, ratio
        if leave < 0:
            return LPStatus.UNBOUNDED
        _pivot(T, basis, leave, entering)


def solve_lp(
    c: Row,
    a_ub: Sequence[Row] = (),
    b_ub: Row = (),
    a_eq: Sequence[Row] = (),
    b_eq: Row = (),
    maximize: bool = False,
) -> LPResult:
    """Optimize c.x over {x : a_ub.x <= b_ub, a_eq.x = b_eq}, x free."""
    n = len(c)
    m_ub, m_eq = len(a_ub), len(a_eq)
    m = m_ub + m_eq
    nstruct = 2 * n + m_ub  # u, v (x = u - v), slacks

    if m == 0:
        # Unconstrained: optimum exists only if c == 0.
        if all(Q(ci) == 0 for ci in c):
            return LPResult(LPStatus.OPTIMAL, (Q(0),) * n, Q(0))
        return LPResult(LPStatus.UNBOUNDED, (Q(0),) * n, None)

    T: list[list[Fraction]] = []
    rows = [(list(r), Q(b), True) for r, b in zip(a_ub, b_ub)]
    rows += [(list(r), Q(b), False) for r, b in zip(a_eq, b_eq)]
    for k, (coef, rhs, is_ub) in enumerate(rows):
        if len(coef) != n:
            raise ValueError("row length does not match variable count")
        row = [Q(0)] * (nstruct + m + 1)
        for j, a in enumerate(coef):
            row[j] = Q(a)
            row[n + j] = -Q(a)
        if is_ub:
            row[2 * n + k] = Q(1)
        row[-1] = rhs
        if rhs < 0:
            row = [-v for v in row]
        row[nstruct + k] = Q(1)  # artificial
        T.append(row)
    basis = [nstruct + k for k in range(m)]

    # Phase 1: minimize sum of artificials.
    cost1 = [Q(0)] * nstruct + [Q(1)] * m
    status = _simplex_min(T, basis, cost1)
    assert status is LPStatus.OPTIMAL  # phase 1 is always bounded below by 0
    total = sum((T[i][-1] for i in range(m) if basis[i] >= nstruct), Q(0))
    if total > 0:
        return LPResult(LPStatus.INFEASIBLE, None, None)

    # Drive remaining artificials out of the basis (degenerate rows).
    drop_rows: list[int] = []
    for i in range(len(T)):
        if basis[i] >= nstruct:
            col = next((j for j in range(nstruct) if T[i][j] != 0), None)
            if col is None:
                drop_rows.append(i)
            else:
                _pivot(T, basis, i, col)
    for i in sorted(drop_rows, reverse=True):
        del T[i]
        del basis[i]
    T = [row[:nstruct] + [row[-1]] for row in T]

    sign = Q(-1) if maximize else Q(1)
    cost2 = [sign * Q(ci) for ci in c] + [-sign * Q(ci) for ci in c]
    cost2 += [Q(0)] * m_ub
    status = _simplex_min(T, basis, cost2)
    xvals = [Q(0)] * nstruct
    for i, b in enumerate(basis):
        xvals[b] = T[i][-1]
    x = tuple(xvals[j] - xvals[n + j] for j in range(n))
    if status is LPStatus.UNBOUNDED:
        return LPResult(LPStatus.UNBOUNDED, x, None)
    value = sum((Q(ci) * xi for ci, xi in zip(c, x)), Q(0))
    return LPResult(LPStatus.OPTIMAL, x, value)


def feasible_point(
    a_ub: Sequence[Row] = (),
    b_ub: Row = (),
    a_eq: Sequence[Row] = (),
    b_eq: Row = (),
) -> tuple[Fraction, ...] | None:
    """A point of the (closed) system, or None if it is empty."""
    n = max(
        [len(r) for r in a_ub] + [len(r) for r in a_eq] + [0],
    )
    res = solve_lp([Q(0)] * n, a_ub, b_ub, a_eq, b_eq)
    return res.x if res.status is LPStatus.OPTIMAL else None
