"""(-1)-curves on a del Pezzo surface, their incidence graph and blowdowns."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .errors import CurveNotFoundError, InvariantViolation, UnsupportedDegreeError
from .lattice import Surface, Vector, anticanonical_class, canonical_class, class_name, pairing


@dataclass(frozen=True)
class CurveSet:
    surface: Surface
    classes: tuple[Vector, ...]

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def index(self, c: Sequence[int]) -> int:
        try:
            return self.classes.index(tuple(c))
        except ValueError:
            raise CurveNotFoundError(f"{tuple(c)} is not a (-1)-class of the degree {self.surface.degree} surface") from None


@dataclass(frozen=True)
class IncidenceGraph:
    curves: CurveSet
    edges: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> range:
        return range(len(self.curves))

    def degrees(self) -> list[int]:
        deg = [0] * len(self.curves)
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in self.vertices]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def triangles(self) -> list[tuple[int, int, int]]:
        adj = self.adjacency()
        return [(a, b, c) for a, b in self.edges for c in adj[a] & adj[b] if c > b]

    def girth(self) -> float:
        """Length of a shortest cycle (``inf`` for a forest), by BFS from every vertex."""
        adj = self.adjacency()
        best = float("inf")
        for root in self.vertices:
            dist = {root: 0}
            parent = {root: None}
            queue = [root]
            for u in queue:
                for w in adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    def to_dict(self) -> dict:
        return {
            "degree": self.curves.surface.degree,
            "vertices": [list(c) for c in self.curves.classes],
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)


@dataclass(frozen=True)
class Blowdown:
    contracted: tuple[Vector, ...]
    line_class: Vector


def _coefficient_bound(s: Surface) -> tuple[int, int]:
    # From -3*c0 - sum(ci) = -1 and sum(ci^2) = c0^2 + 1, Cauchy-Schwarz gives
    # (1 - 3*c0)^2 <= r*(c0^2 + 1), i.e. d*c0^2 - 6*c0 + (1 - r) <= 0 with d the degree.
    # The roots are (3 +- sqrt(9 + d*(r - 1))) / d.
    d, r = s.degree, s.r
    disc = 9 + d * (r - 1)
    root = isqrt(disc) + 1
    lo, hi = (3 - root) // d, (3 + root) // d + 1
    return lo, hi


def minus_one_classes(s: Surface) -> CurveSet:
    """All classes ``c`` with ``c.c = -1`` and ``c.K = -1``, by exhaustive search.

    The line coefficient ``c0`` ranges over the Cauchy-Schwarz interval from
    :func:`_coefficient_bound`; for fixed ``c0`` each remaining coefficient
    satisfies ``|ci| <= sqrt(c0^2 + 1)``.
    """
    if s.degree < 3:
        raise UnsupportedDegreeError(f"(-1)-class enumeration is supported for degree >= 3, got {s.degree}")
    K = canonical_class(s)
    lo, hi = _coefficient_bound(s)
    found = []
    for c0 in range(lo, hi + 1):
        b = isqrt(c0 * c0 + 1)
        for tail in itertools.product(range(-b, b + 1), repeat=s.r):
            if sum(tail) != 1 - 3 * c0:
                continue
            c = (c0,) + tail
            if pairing(c, c, s) == -1 and pairing(c, K, s) == -1:
                found.append(c)
    return CurveSet(s, tuple(sorted(found)))


def incidence_graph(cs: CurveSet) -> IncidenceGraph:
    s = cs.surface
    edges = []
    for (i, a), (j, b) in itertools.combinations(enumerate(cs.classes), 2):
        p = pairing(a, b, s)
        if p not in (0, 1):
            raise InvariantViolation(f"{class_name(a)} . {class_name(b)} = {p}; expected 0 or 1")
        if p == 1:
            edges.append((i, j))
    return IncidenceGraph(cs, tuple(edges))


def neighbors(cs: CurveSet, c: Sequence[int]) -> list[Vector]:
    cs.index(c)
    return sorted(d for d in cs.classes if pairing(c, d, cs.surface) == 1)


def blowdown_line_class(contracted: Sequence[Sequence[int]], s: Surface) -> Vector:
    """Pullback of a line under the contraction of ``contracted``: ``(-K + sum f) / 3``."""
    total = list(anticanonical_class(s))
    for f in contracted:
        total = [x + y for x, y in zip(total, s.check(f))]
    if any(x % 3 for x in total):
        raise InvariantViolation(f"-K + sum of contracted classes {tuple(total)} is not divisible by 3")
    line = tuple(x // 3 for x in total)
    if pairing(line, line, s) != 1:
        raise InvariantViolation(f"line class {line} has self-intersection {pairing(line, line, s)}")
    for f in contracted:
        if pairing(line, f, s) != 0:
            raise InvariantViolation(f"line class {line} meets contracted curve {tuple(f)}")
    return line


def _independent_sets(cs: CurveSet, size: int):
    s = cs.surface

    def grow(chosen, candidates):
        if len(chosen) == size:
            yield chosen
            return
        for k, c in enumerate(candidates):
            rest = [d for d in candidates[k + 1:] if pairing(c, d, s) == 0]
            yield from grow(chosen + [c], rest)

    yield from grow([], list(cs.classes))


def blowdowns(cs: CurveSet) -> list[Blowdown]:
    """Every set of ``r`` pairwise disjoint (-1)-curves with its line class, in lexicographic order."""
    s = cs.surface
    if s.degree not in (4, 5):
        raise UnsupportedDegreeError(f"blowdowns are enumerated for degrees 4 and 5, got {s.degree}")
    found = [tuple(sorted(sub)) for sub in _independent_sets(cs, s.r)]
    return [Blowdown(sub, blowdown_line_class(sub, s)) for sub in sorted(found)]
