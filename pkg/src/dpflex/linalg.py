"""Exact integer linear algebra on small dense matrices.

Everything works on Python ints (arbitrary precision) with integer row
operations followed by gcd reduction of each row, so no rational numbers
appear during elimination.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

Vector = tuple[int, ...]


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _reduce_row(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


def primitive_or_zero(v: Sequence[int]) -> Vector:
    g = reduce(gcd, v, 0)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def echelon(rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Reduced echelon form computed fraction-free.

    Returns ``(rows, pivots)`` where every returned row is primitive with a
    positive pivot entry and each pivot column is zero in all other rows.
    The result depends only on the row space, so it doubles as a canonical
    basis.
    """
    m = [_reduce_row([int(x) for x in r]) for r in rows if any(r)]
    pivots: list[int] = []
    top = 0
    for c in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        p = m[top]
        if p[c] < 0:
            p = m[top] = [-x for x in p]
        for i in range(len(m)):
            if i != top and m[i][c] != 0:
                a, b = p[c], m[i][c]
                m[i] = _reduce_row([a * x - b * y for x, y in zip(m[i], p)])
        pivots.append(c)
        top += 1
        if top == len(m):
            break
    return m[:top], pivots


def rank(rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    return len(echelon(rows, ncols)[0])


def row_basis(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Canonical integer basis of the row space."""
    return [tuple(r) for r in echelon(rows, ncols)[0]]


def kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Integer basis of ``{x : rows @ x == 0}``, one primitive vector per free column."""
    ech, pivots = echelon(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    scale = reduce(lcm, (ech[i][c] for i, c in enumerate(pivots)), 1)
    for f in free:
        x = [0] * ncols
        x[f] = scale
        for i, c in enumerate(pivots):
            x[c] = -ech[i][f] * scale // ech[i][c]
        basis.append(primitive_or_zero(x))
    return basis


def det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by Bareiss fraction-free elimination."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [[int(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def generalized_cross(rows: Sequence[Sequence[int]]) -> Vector:
    """Vector of signed maximal minors of an ``(n-1) x n`` matrix.

    It is orthogonal to every row and vanishes exactly when the rows are
    linearly dependent.
    """
    n = len(rows) + 1
    out = []
    for j in range(n):
        minor = [[r[k] for k in range(n) if k != j] for r in rows]
        out.append((-1) ** j * det(minor))
    return tuple(out)


def project_off(v: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Orthogonal projection of ``v`` onto the complement of ``span(basis)``.

    The rational result is scaled back to a primitive integer vector with the
    same direction (the zero vector is returned unchanged).
    """
    if not basis:
        return tuple(v)
    k = len(basis)
    gram = [[Fraction(dot(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [Fraction(dot(basis[i], v)) for i in range(k)]
    coeffs = _solve(gram, rhs)
    proj = [Fraction(x) - sum(c * b[t] for c, b in zip(coeffs, basis)) for t, x in enumerate(v)]
    den = reduce(lcm, (p.denominator for p in proj), 1)
    return primitive_or_zero([int(p * den) for p in proj])


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    # a is a positive definite Gram matrix here, so no pivoting failure occurs.
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c] != 0)
        m[c], m[piv] = m[piv], m[c]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] / m[i][i] for i in range(n)]
