"""Exact rational vectors and product-space norms.

The primal norm is the maximum over factor blocks of the blockwise sup-norm
(so unit balls are boxes and stay polyhedral); its dual is the blockwise
1-norm summed over factors.  Numerically these coincide with the plain
sup-norm / 1-norm on the full vector, but the block structure is kept for
validation and documentation of product spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatchError
from .rationals import Q


@dataclass(frozen=True)
class Vec:
    coords: tuple[Fraction, ...]

    @staticmethod
    def of(*values) -> "Vec":
        return Vec(tuple(Q(v) for v in values))

    @staticmethod
    def from_seq(values: Iterable) -> "Vec":
        return Vec(tuple(Q(v) for v in values))

    @staticmethod
    def zero(dim: int) -> "Vec":
        return Vec((Q(0),) * dim)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Vec") -> "Vec":
        self._check(other)
        return Vec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vec") -> "Vec":
        self._check(other)
        return Vec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vec":
        return Vec(tuple(-a for a in self.coords))

    def scale(self, factor: Fraction) -> "Vec":
        f = Q(factor)
        return Vec(tuple(f * a for a in self.coords))

    def dot(self, other: "Vec") -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self.coords, other.coords)), Q(0))

    def concat(self, other: "Vec") -> "Vec":
        return Vec(self.coords + other.coords)

    def block(self, start: int, length: int) -> "Vec":
        return Vec(self.coords[start : start + length])

    def sup_norm(self) -> Fraction:
        return max((abs(a) for a in self.coords), default=Q(0))

    def one_norm(self) -> Fraction:
        return sum((abs(a) for a in self.coords), Q(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def _check(self, other: "Vec") -> None:
        if len(self.coords) != len(other.coords):
            raise DimensionMismatchError(
                f"vector dims differ: {len(self.coords)} vs {len(other.coords)}"
            )

    def __repr__(self) -> str:
        return "Vec(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class NormContext:
    """Block structure of a product space with max/sum norms."""

    factor_dims: tuple[int, ...]

    @staticmethod
    def flat(dim: int) -> "NormContext":
        return NormContext((dim,))

    @staticmethod
    def of(*dims: int) -> "NormContext":
        return NormContext(tuple(dims))

    @property
    def dim(self) -> int:
        return sum(self.factor_dims)

    def check_vector(self, v: Vec) -> None:
        if v.dim != self.dim:
            raise DimensionMismatchError(
                f"vector dim {v.dim} does not match context dim {self.dim}"
            )

    def blocks(self, v: Vec) -> list[Vec]:
        self.check_vector(v)
        out, start = [], 0
        for d in self.factor_dims:
            out.append(v.block(start, d))
            start += d
        return out

    def primal_norm(self, v: Vec) -> Fraction:
        return max((b.sup_norm() for b in self.blocks(v)), default=Q(0))

    def dual_norm(self, v: Vec) -> Fraction:
        return sum((b.one_norm() for b in self.blocks(v)), Q(0))


def vec_sum(vectors: Sequence[Vec]) -> Vec:
    if not vectors:
        raise DimensionMismatchError("empty vector sum")
    total = vectors[0]
    for v in vectors[1:]:
        total = total + v
    return total
