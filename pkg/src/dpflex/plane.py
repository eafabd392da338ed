"""Exact projective plane geometry over the integers.

Points and lines are primitive integer triples normalised so that the first
nonzero entry is positive; this makes equality of Python tuples coincide
with projective equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DegenerateInputError, InvariantViolation
from .linalg import det, dot, kernel, primitive_or_zero


def _normalise(v: Sequence[int]) -> tuple[int, int, int]:
    v = tuple(int(x) for x in v)
    if len(v) != 3:
        raise ValueError(f"homogeneous coordinates need 3 entries, got {len(v)}")
    if not any(v):
        raise DegenerateInputError("(0:0:0) is not a projective point or line")
    v = primitive_or_zero(v)
    if next(x for x in v if x) < 0:
        v = tuple(-x for x in v)
    return v


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[int, int, int]

    def __init__(self, *coords):
        if len(coords) == 1:
            coords = coords[0]
        object.__setattr__(self, "coords", _normalise(coords))

    def __str__(self):
        return ":".join(map(str, self.coords))

    @classmethod
    def parse(cls, text: str) -> "ProjPoint":
        return cls(tuple(int(x) for x in text.split(":")))


@dataclass(frozen=True)
class ProjLine:
    coeffs: tuple[int, int, int]

    def __init__(self, *coeffs):
        if len(coeffs) == 1:
            coeffs = coeffs[0]
        object.__setattr__(self, "coeffs", _normalise(coeffs))

    def __str__(self):
        return ":".join(map(str, self.coeffs))

    def contains(self, p: ProjPoint) -> bool:
        return dot(self.coeffs, p.coords) == 0

    @classmethod
    def parse(cls, text: str) -> "ProjLine":
        return cls(tuple(int(x) for x in text.split(":")))


@dataclass(frozen=True)
class Conic:
    """Conic ``x^T M x = 0`` with ``M`` symmetric; entries scaled to be primitive."""

    matrix: tuple[tuple[int, int, int], ...]

    def value(self, p: ProjPoint) -> int:
        x = p.coords
        return sum(self.matrix[i][j] * x[i] * x[j] for i in range(3) for j in range(3))

    def contains(self, p: ProjPoint) -> bool:
        return self.value(p) == 0

    @property
    def determinant(self) -> int:
        return det(self.matrix)

    @property
    def smooth(self) -> bool:
        return self.determinant != 0


def cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def line_through(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise DegenerateInputError(f"the points {p} and {q} coincide")
    return ProjLine(cross(p.coords, q.coords))


def meet(l1: ProjLine, l2: ProjLine) -> ProjPoint:
    if l1 == l2:
        raise DegenerateInputError(f"the lines {l1} and {l2} coincide")
    return ProjPoint(cross(l1.coeffs, l2.coeffs))


def collinearity_det(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> int:
    return det([p.coords, q.coords, r.coords])


def collinear(p: ProjPoint, q: ProjPoint, r: ProjPoint) -> bool:
    return collinearity_det(p, q, r) == 0


def general_position(points: Sequence[ProjPoint]) -> bool:
    """No two points equal and no three on a line."""
    if len(set(points)) != len(points):
        return False
    return not any(collinear(*t) for t in itertools.combinations(points, 3))


def conic_through(points: Sequence[ProjPoint]) -> Conic:
    """The unique conic through five points in general position."""
    if len(points) != 5:
        raise ValueError(f"a conic is determined by 5 points, got {len(points)}")
    if not general_position(points):
        raise DegenerateInputError("conic_through needs 5 distinct points with no three collinear")
    # unknowns (a, b, c, d, e, f) of a x^2 + b y^2 + c z^2 + d xy + e xz + f yz
    rows = []
    for p in points:
        x, y, z = p.coords
        rows.append((x * x, y * y, z * z, x * y, x * z, y * z))
    ker = kernel(rows, 6)
    if len(ker) != 1:
        raise DegenerateInputError(f"the points {', '.join(map(str, points))} do not determine a unique conic")
    a, b, c, d, e, f = ker[0]
    # store 2*M so the off-diagonal halves stay integral
    m = primitive_or_zero((2 * a, d, e, d, 2 * b, f, e, f, 2 * c))
    conic = Conic((m[0:3], m[3:6], m[6:9]))
    if not all(conic.contains(p) for p in points):
        raise InvariantViolation("computed conic misses an input point")
    if not conic.smooth:
        raise DegenerateInputError("the conic through these points is singular; three of them are collinear")
    return conic
