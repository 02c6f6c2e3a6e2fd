"""Exact integer and rational primitives.

Rationals are plain :class:`fractions.Fraction` values; integer matrices are
sequences of equal-length rows of Python ints. Nothing here ever touches a
float.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Iterable, Optional, Sequence

Rational = Fraction
IntMatrix = Sequence[Sequence[int]]


class RankDeficientError(ValueError):
    pass


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected outright: a float that reached this point has
    already lost exactness.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted in exact computations")
    return Fraction(value)


def rational_vector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(to_rational(v) for v in values)


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _check_matrix(M: IntMatrix) -> list[list[int]]:
    rows = [list(r) for r in M]
    if not rows or not rows[0]:
        raise ValueError("empty matrix")
    width = len(rows[0])
    for r in rows:
        if len(r) != width:
            raise ValueError("ragged matrix rows")
        for v in r:
            if not isinstance(v, int):
                raise TypeError(f"non-integer matrix entry {v!r}")
    return rows


def bareiss_determinant(M: IntMatrix) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    A = _check_matrix(M)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("matrix is not square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = A[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                A[i][j] = (A[i][j] * pivot - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = pivot
    return sign * A[n - 1][n - 1]


def dedupe_rows(M: IntMatrix) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for r in M:
        t = tuple(r)
        if t not in seen:
            seen.add(t)
            out.append(t)
    return out


def maximal_minor_gcd(M: IntMatrix) -> int:
    """Gcd of all maximal (cols x cols) minors of a full-column-rank matrix.

    This is the index of the lattice spanned by the columns inside the
    saturated lattice ``span(columns) & Z^rows``. Repeated rows are dropped
    first, which leaves the minor gcd unchanged. Cost is C(rows, cols)
    Bareiss determinants, which is fine at the sizes used here (cols <= 6
    and, after deduplication, rows <= cols + 1).
    """
    A = _check_matrix(M)
    d = len(A[0])
    rows = dedupe_rows(A)
    if len(rows) < d:
        raise RankDeficientError("rank deficient")
    g = 0
    for pick in combinations(rows, d):
        g = gcd(g, bareiss_determinant(pick))
    if g == 0:
        raise RankDeficientError("rank deficient")
    return g


def integer_rank(M: IntMatrix) -> int:
    """Rank over Q by fraction-free row reduction."""
    A = _check_matrix(M)
    rows, cols = len(A), len(A[0])
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        p = A[rank][c]
        for i in range(rank + 1, rows):
            f = A[i][c]
            if f:
                A[i] = [p * a - f * b for a, b in zip(A[i], A[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class DiophantineSolution:
    """Solution data for ``sum(l[k] * c[k]) == target`` over the integers.

    ``particular`` is None when ``gcd(l)`` does not divide the target.
    ``basis`` always generates the full homogeneous lattice.
    """

    coefficients: tuple[int, ...]
    target: int
    gcd: int
    particular: Optional[tuple[int, ...]]
    basis: tuple[tuple[int, ...], ...]

    @property
    def solvable(self) -> bool:
        return self.particular is not None


def solve_linear_diophantine(l: Sequence[int], target: int) -> DiophantineSolution:
    """Particular solution and homogeneous lattice basis for ``l . c = target``.

    Column operations with unimodular 2x2 blocks reduce the row vector ``l``
    to ``(g, 0, ..., 0)``. The accumulated unimodular matrix then gives the
    particular solution (first column, scaled) and a basis of the kernel
    lattice (remaining columns), which is therefore primitive.
    """
    l = [int(v) for v in l]
    if not l:
        raise ValueError("need at least one coefficient")
    if any(v < 1 for v in l):
        raise ValueError("coefficients must be positive")
    m = len(l)
    cols = [[int(i == j) for i in range(m)] for j in range(m)]
    a = list(l)
    for i in range(1, m):
        g, x, y = extended_gcd(a[0], a[i])
        p, q = a[i] // g, a[0] // g
        c0, ci = cols[0], cols[i]
        cols[0] = [x * u + y * v for u, v in zip(c0, ci)]
        cols[i] = [p * u - q * v for u, v in zip(c0, ci)]
        a[0], a[i] = g, 0
    g = a[0]
    particular = None
    if target % g == 0:
        s = target // g
        particular = tuple(s * v for v in cols[0])
    return DiophantineSolution(
        coefficients=tuple(l),
        target=target,
        gcd=g,
        particular=particular,
        basis=tuple(tuple(c) for c in cols[1:]),
    )
