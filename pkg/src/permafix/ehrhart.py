"""Lattice points in integer dilates of the fixed polytope.

A lattice point of ``t * P`` is constant on each cycle, so it is described by
one integer value per cycle, ``c in Z^m`` with ``sum l_k c_k = t n(n+1)/2``.
Two counters are provided:

* ``enumerate``: walk all such c inside the box ``[t, t n]^m`` and test each
  point with the membership test. Simple, and the reference for small cases.
* ``dp``: sweep values upward and place cycles in sorted order, tracking the
  set of placed cycles and their weighted sum. The subset inequalities only
  need checking at cycle-block boundaries of the sorted point (the slack is
  concave inside a block of equal values), so this counts the same set
  without visiting it point by point.

Dilates are integers only.
"""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from .exact import solve_linear_diophantine
from .fixed_polytope import contains
from .permutations import Permutation, standard_form


def _check_dilate(t: int) -> None:
    if not isinstance(t, int) or t < 1:
        raise ValueError("dilate must be a positive integer")


def lattice_points(sigma: Permutation, t: int) -> Iterator[tuple[int, ...]]:
    """Yield every integer point of ``t * P`` (brute force over cycle values)."""
    _check_dilate(t)
    n = sigma.n
    lengths = [len(c) for c in sigma.cycles]
    m = len(lengths)
    target = t * n * (n + 1) // 2
    if not solve_linear_diophantine(lengths, target).solvable:
        return
    lo, hi = t, t * n
    # weight still to be placed after cycle k
    tail = [sum(lengths[k + 1:]) for k in range(m)]
    idx = sigma.cycle_index()
    values = [0] * m

    def rec(k: int, remaining: int):
        l = lengths[k]
        if k == m - 1:
            if remaining % l == 0 and lo <= remaining // l <= hi:
                values[k] = remaining // l
                x = tuple(values[c] for c in idx)
                if contains(sigma, x, t):
                    yield x
            return
        for c in range(lo, hi + 1):
            rest = remaining - l * c
            if rest < lo * tail[k]:
                break
            if rest > hi * tail[k]:
                continue
            values[k] = c
            yield from rec(k + 1, rest)

    yield from rec(0, target)


def _count_dp(sigma: Permutation, t: int) -> int:
    n = sigma.n
    lengths = [len(c) for c in sigma.cycles]
    m = len(lengths)
    target = t * n * (n + 1) // 2
    if target % gcd(*lengths):
        return 0
    size = [sum(lengths[k] for k in range(m) if mask >> k & 1) for mask in range(1 << m)]
    full = (1 << m) - 1
    states: dict[tuple[int, int], int] = {(0, 0): 1}
    for v in range(t, t * n + 1):
        for k in range(m):
            bit = 1 << k
            lk = lengths[k]
            new = defaultdict(int, states)
            for (mask, s), cnt in states.items():
                if mask & bit:
                    continue
                mask2 = mask | bit
                s2 = s + lk * v
                placed = size[mask2]
                if s2 < t * placed * (placed + 1) // 2:
                    continue
                # later cycles take values >= v
                if s2 + (n - placed) * v > target:
                    continue
                new[(mask2, s2)] += cnt
            states = new
        # drop states that can no longer be completed at larger values
        states = {key: c for key, c in states.items()
                  if key[0] == full or key[1] + (n - size[key[0]]) * (v + 1) <= target}
    return states.get((full, target), 0)


def count_lattice_points(sigma: Permutation, t: int, method: str = "dp") -> int:
    """``|t P cap Z^n|`` for the slice P fixed by sigma."""
    _check_dilate(t)
    if method == "dp":
        return _count_dp(sigma, t)
    if method == "enumerate":
        return sum(1 for _ in lattice_points(sigma, t))
    raise ValueError(f"unknown method {method!r}")


def two_valuation(k: int) -> int:
    """Exponent of the largest power of 2 dividing k."""
    if k < 1:
        raise ValueError("2-valuation is defined for positive integers")
    return (k & -k).bit_length() - 1


def segment_count(l1: int, l2: int, t: int) -> int:
    """Lattice points in the t-th dilate when sigma has exactly two cycles."""
    _check_dilate(t)
    if l1 < 1 or l2 < 1:
        raise ValueError("cycle lengths must be positive")
    g = gcd(l1, l2)
    if t % 2 == 0:
        return g * t + 1
    if l1 % 2 and l2 % 2:
        return g * t + 1
    if l1 % 2 != l2 % 2:
        return g * t
    if two_valuation(l1) == two_valuation(l2):
        return g * t
    return 0


def ehrhart_table(sigma: Permutation, t_max: int, method: str = "dp",
                  workers: int = 1) -> list[tuple[int, int]]:
    ts = list(range(1, t_max + 1))
    return list(zip(ts, _counts(sigma, ts, method, workers)))


def _counts(sigma: Permutation, ts: Sequence[int], method: str, workers: int) -> list[int]:
    if workers <= 1 or len(ts) < 2:
        return [count_lattice_points(sigma, t, method) for t in ts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(count_lattice_points, [sigma] * len(ts), ts, [method] * len(ts)))


def lagrange_coefficients(xs: Sequence[int], ys: Sequence[int]) -> list[Fraction]:
    """Coefficients (constant term first) of the interpolating polynomial."""
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    k = len(xs)
    coeffs = [Fraction(0)] * k
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # multiply basis by (x - xj)
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        for d in range(k):
            coeffs[d] += Fraction(yi, denom) * basis[d]
    return coeffs


def even_part_polynomial(sigma: Permutation, method: str = "dp", workers: int = 1) -> list[Fraction]:
    """The polynomial agreeing with the lattice-point count at even dilates.

    Fitted exactly through t = 2, 4, ..., 2m; the degree is m - 1 because
    ``2 P`` is a lattice polytope of dimension m - 1.
    """
    m = sigma.m
    ts = [2 * i for i in range(1, m + 1)]
    return lagrange_coefficients(ts, _counts(sigma, ts, method, workers))


def volume_by_interpolation(sigma: Permutation, method: str = "dp", workers: int = 1) -> Fraction:
    """Normalized volume as the leading coefficient of the even-dilate count polynomial."""
    if sigma.m == 1:
        return Fraction(1)
    return even_part_polynomial(sigma, method, workers)[-1]


def volume_oracle_for_type(lam, method: str = "dp") -> Fraction:
    return volume_by_interpolation(standard_form(lam), method)
