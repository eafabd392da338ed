"""Picard lattice of a del Pezzo surface obtained by blowing up the plane.

Classes are coordinate vectors in the exceptional basis ``e0, e1, ..., er``:
``e0`` is the pullback of a line, ``ei`` the exceptional curve over the i-th
blown-up point.  The intersection form is ``diag(1, -1, ..., -1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Sequence

from .errors import DegenerateInputError, DimensionError

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Surface:
    """Degree-``degree`` del Pezzo surface, a blowup of the plane in ``9 - degree`` points."""

    degree: int

    def __post_init__(self):
        if not isinstance(self.degree, int) or not 1 <= self.degree <= 9:
            raise ValueError(f"degree must be an integer in 1..9, got {self.degree!r}")

    @property
    def r(self) -> int:
        return 9 - self.degree

    @property
    def rank(self) -> int:
        return self.r + 1

    def basis(self, i: int) -> Vector:
        """The basis vector ``e_i``."""
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def gram(self) -> list[list[int]]:
        return [[(1 if i == 0 else -1) if i == j else 0 for j in range(self.rank)] for i in range(self.rank)]

    def check(self, v: Sequence[int]) -> Vector:
        v = tuple(int(x) for x in v)
        if len(v) != self.rank:
            raise DimensionError(f"class {v} has length {len(v)}, surface rank is {self.rank}")
        return v


def pairing(a: Sequence[int], b: Sequence[int], s: Surface) -> int:
    """Intersection number ``a . b`` on ``s``."""
    a, b = s.check(a), s.check(b)
    return a[0] * b[0] - sum(x * y for x, y in zip(a[1:], b[1:]))


def gram_adjust(v: Sequence[int]) -> Vector:
    """Return ``G v`` so that ``dot(G v, h) == pairing(v, h)``."""
    return (v[0],) + tuple(-x for x in v[1:])


def canonical_class(s: Surface) -> Vector:
    return (-3,) + (1,) * s.r


def anticanonical_class(s: Surface) -> Vector:
    return (3,) + (-1,) * s.r


def primitive(v: Sequence[int]) -> Vector:
    """Divide ``v`` by the gcd of its entries, keeping the sign."""
    v = tuple(int(x) for x in v)
    g = reduce(gcd, v, 0)
    if g == 0:
        raise DegenerateInputError("the zero vector has no primitive representative")
    return tuple(x // g for x in v)


def parse_class(text: str) -> Vector:
    """Parse the wire format ``"a0,a1,...,ar"``."""
    parts = text.split(",")
    try:
        return tuple(int(p.strip()) for p in parts)
    except ValueError:
        raise ValueError(f"malformed divisor class {text!r}; expected comma-separated integers") from None


def format_class(v: Sequence[int]) -> str:
    return ",".join(str(x) for x in v)


def class_name(v: Sequence[int]) -> str:
    """Human-readable form such as ``2e0-e1-e2``."""
    terms = []
    for i, c in enumerate(v):
        if c == 0:
            continue
        mag = abs(c)
        body = f"e{i}" if mag == 1 else f"{mag}e{i}"
        terms.append(("-" if c < 0 else "+") + body)
    if not terms:
        return "0"
    out = "".join(terms)
    return out[1:] if out[0] == "+" else out
