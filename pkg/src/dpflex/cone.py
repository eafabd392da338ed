"""Exact rational polyhedral cones held as a certified dual pair.

A :class:`Cone` in ``Z^n`` stores both descriptions

* generators: extremal ``rays`` plus a basis of the ``lineality`` space,
* constraints: irredundant inner facet normals ``facets`` (``<f, x> >= 0``)
  plus a basis of the ``equations`` cutting out the linear span,

all with respect to the standard dot product.  Conversion between the two is
the double description method run on integer vectors; :func:`dual` simply
swaps the two halves.

Rays are only well defined modulo the lineality space and facets only modulo
the equations, so both are stored projected onto the orthogonal complement of
the respective subspace and scaled to primitive integer vectors.  That makes
the representation canonical: two cones are equal iff their fields are equal.
"""
from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DegenerateInputError, DimensionError, InvariantViolation, OracleScopeError
from .linalg import dot, generalized_cross, kernel, primitive_or_zero, project_off, rank, row_basis

Vector = tuple[int, ...]


class Membership(enum.Enum):
    INTERIOR = "INTERIOR"
    BOUNDARY = "BOUNDARY"
    OUTSIDE = "OUTSIDE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    rays: tuple[Vector, ...]
    facets: tuple[Vector, ...]
    lineality: tuple[Vector, ...] = ()
    equations: tuple[Vector, ...] = ()

    @property
    def dim(self) -> int:
        """Dimension of the linear span."""
        return self.ambient_dim - len(self.equations)

    @property
    def pointed(self) -> bool:
        return not self.lineality

    @property
    def full_dimensional(self) -> bool:
        return not self.equations

    def __repr__(self):
        return (f"Cone(ambient_dim={self.ambient_dim}, dim={self.dim}, "
                f"{len(self.rays)} rays, {len(self.facets)} facets, pointed={self.pointed})")

    def certify(self) -> None:
        """Raise :class:`InvariantViolation` unless rays and facets describe the same cone minimally."""
        n = self.ambient_dim
        for f in self.facets:
            for r in self.rays:
                if dot(f, r) < 0:
                    raise InvariantViolation(f"facet {f} is negative on ray {r}")
        for e in self.equations:
            for g in self.rays + self.lineality:
                if dot(e, g) != 0:
                    raise InvariantViolation(f"equation {e} does not vanish on generator {g}")
        for f in self.facets:
            for l in self.lineality:
                if dot(f, l) != 0:
                    raise InvariantViolation(f"facet {f} does not vanish on lineality vector {l}")
        if rank(self.rays + self.lineality, n) != self.dim:
            raise InvariantViolation("generators do not span a space of the stated dimension")
        lin_dim = len(self.lineality)
        for r in self.rays:
            tight = [f for f in self.facets if dot(f, r) == 0]
            if rank(tight + list(self.equations), n) != n - lin_dim - 1:
                raise InvariantViolation(f"ray {r} is not extremal")
        for f in self.facets:
            tight = [r for r in self.rays if dot(f, r) == 0]
            if rank(tight + list(self.lineality), n) != self.dim - 1:
                raise InvariantViolation(f"facet {f} is redundant")
        for part in (self.rays, self.facets):
            if list(part) != sorted(set(part)):
                raise InvariantViolation("rays and facets must be sorted and duplicate-free")

    def to_dict(self) -> dict:
        return {
            "dim": self.ambient_dim,
            "rays": [list(r) for r in self.rays],
            "facets": [list(f) for f in self.facets],
            "pointed": self.pointed,
            "span_dim": self.dim,
            "lineality": [list(v) for v in self.lineality],
            "equations": [list(v) for v in self.equations],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Cone":
        """Rebuild a cone from :meth:`to_dict` output, re-deriving everything from the facets."""
        return cone_from_inequalities(data["facets"], data["dim"], equations=data.get("equations", ()))


def _check_vectors(vectors: Iterable[Sequence[int]], dim: int) -> list[Vector]:
    out = []
    for v in vectors:
        v = tuple(int(x) for x in v)
        if len(v) != dim:
            raise DimensionError(f"vector {v} has length {len(v)}, expected {dim}")
        out.append(v)
    return out


def _double_description(ineqs: Sequence[Vector], eqs: Sequence[Vector], n: int):
    """Generators of ``{x : <a, x> >= 0 for a in ineqs, <b, x> = 0 for b in eqs}``.

    Returns ``(rays, lineality)`` with the rays extremal modulo the
    lineality space.  Inequalities are inserted in sorted order; the zero set
    of each ray is tracked as a bitmask over the inserted inequalities.
    """
    rows = sorted({primitive_or_zero(a) for a in ineqs if any(a)})
    if eqs:
        lin = [list(v) for v in kernel(eqs, n)]
    else:
        lin = [[int(i == j) for j in range(n)] for i in range(n)]
    span_dim = len(lin)
    rays: list[tuple[Vector, int]] = []

    for idx, a in enumerate(rows):
        bit = 1 << idx
        lvals = [dot(a, l) for l in lin]
        j = next((i for i, v in enumerate(lvals) if v != 0), None)
        if j is not None:
            # The new halfspace cuts the lineality space: one direction becomes a ray.
            pivot, pv = lin[j], lvals[j]
            if pv < 0:
                pivot, pv = [-x for x in pivot], -pv
            lin = [list(primitive_or_zero([pv * x - v * y for x, y in zip(l, pivot)]))
                   for i, (l, v) in enumerate(zip(lin, lvals)) if i != j]
            rays = [(primitive_or_zero([pv * x - dot(a, r) * y for x, y in zip(r, pivot)]), m | bit)
                    for r, m in rays]
            rays.append((tuple(pivot), bit - 1))
            continue

        vals = [dot(a, r) for r, _ in rays]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg:
            rays = [(r, m | bit) if v == 0 else (r, m) for (r, m), v in zip(rays, vals)]
            continue
        pos = [i for i, v in enumerate(vals) if v > 0]
        new = [rays[i] for i in pos] + [(rays[i][0], rays[i][1] | bit) for i, v in enumerate(vals) if v == 0]
        need = span_dim - len(lin) - 2
        masks = [m for _, m in rays]
        for p in pos:
            rp, mp = rays[p]
            for q in neg:
                rq, mq = rays[q]
                common = mp & mq
                if common.bit_count() < need:
                    continue
                if any((m & common) == common for i, m in enumerate(masks) if i != p and i != q):
                    continue
                ray = primitive_or_zero([vals[p] * y - vals[q] * x for x, y in zip(rp, rq)])
                new.append((ray, common | bit))
        rays = new

    return [r for r, _ in rays], [tuple(l) for l in lin]


def _canonical(vectors: Sequence[Vector], subspace: Sequence[Vector]) -> tuple[Vector, ...]:
    out = {project_off(v, subspace) for v in vectors}
    return tuple(sorted(v for v in out if any(v)))


def _build(rays, lineality, facets, equations, n) -> Cone:
    lineality = tuple(row_basis(lineality, n))
    equations = tuple(row_basis(equations, n))
    return Cone(
        ambient_dim=n,
        rays=_canonical(rays, lineality),
        facets=_canonical(facets, equations),
        lineality=lineality,
        equations=equations,
    )


def cone_from_generators(gens: Sequence[Sequence[int]], dim: int, lineality: Sequence[Sequence[int]] = ()) -> Cone:
    """The cone of nonnegative combinations of ``gens`` (plus the span of ``lineality``)."""
    gens = _check_vectors(gens, dim)
    lineality = _check_vectors(lineality, dim)
    if not any(any(g) for g in gens + lineality):
        raise DegenerateInputError("a cone needs at least one nonzero generator")
    facets, equations = _double_description(gens, lineality, dim)
    rays, lin = _double_description(facets, equations, dim)
    return _build(rays, lin, facets, equations, dim)


def cone_from_inequalities(normals: Sequence[Sequence[int]], dim: int, equations: Sequence[Sequence[int]] = ()) -> Cone:
    """The cone ``{x : <n, x> >= 0 for all normals, <e, x> = 0 for all equations}``."""
    normals = _check_vectors(normals, dim)
    equations = _check_vectors(equations, dim)
    rays, lin = _double_description(normals, equations, dim)
    facets, eqs = _double_description(rays, lin, dim)
    return _build(rays, lin, facets, eqs, dim)


def dual(c: Cone) -> Cone:
    """Dual cone ``{y : <y, x> >= 0 for all x in c}``."""
    return Cone(
        ambient_dim=c.ambient_dim,
        rays=c.facets,
        facets=c.rays,
        lineality=c.equations,
        equations=c.lineality,
    )


def intersect(cones: Sequence[Cone]) -> Cone:
    if not cones:
        raise DegenerateInputError("intersection of an empty list of cones")
    n = cones[0].ambient_dim
    if any(c.ambient_dim != n for c in cones):
        raise DimensionError("cones live in different ambient dimensions")
    normals = sorted({f for c in cones for f in c.facets})
    equations = [e for c in cones for e in c.equations]
    return cone_from_inequalities(normals, n, equations=equations)


def membership(v: Sequence[int], c: Cone) -> Membership:
    """Classify ``v`` as in the relative interior, on the relative boundary, or outside ``c``."""
    v = tuple(v)
    if len(v) != c.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} tested against a cone in dimension {c.ambient_dim}")
    if any(dot(e, v) != 0 for e in c.equations):
        return Membership.OUTSIDE
    vals = [dot(f, v) for f in c.facets]
    if any(x < 0 for x in vals):
        return Membership.OUTSIDE
    if all(x > 0 for x in vals):
        return Membership.INTERIOR
    return Membership.BOUNDARY


def contains(outer: Cone, inner_gens: Sequence[Sequence[int]]) -> bool:
    return all(membership(g, outer) is not Membership.OUTSIDE for g in inner_gens)


def brute_force_rays(normals: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Extremal rays of ``{x : <n, x> >= 0}`` by trying every ``(dim - 1)``-subset of normals.

    Independent of the double description code; used as a test oracle for
    pointed cones.
    """
    normals = _check_vectors(normals, dim)
    if dim > 7 or len(normals) > 40:
        raise OracleScopeError(f"brute force limited to dim <= 7 and <= 40 normals, got {dim} and {len(normals)}")
    normals = sorted({primitive_or_zero(a) for a in normals if any(a)})
    found = set()
    for subset in itertools.combinations(normals, dim - 1):
        k = generalized_cross(subset)
        if not any(k):
            continue
        vals = [dot(a, k) for a in normals]
        if all(x >= 0 for x in vals):
            found.add(primitive_or_zero(k))
        elif all(x <= 0 for x in vals):
            found.add(primitive_or_zero([-x for x in k]))
    return sorted(found)
