"""Normalized volume of the fixed polytope, three ways.

1. Closed form: ``n^(m-2) * gcd(l_1, ..., l_m)`` (1 when m == 1).
2. Zonotope tiling: one parallelotope per spanning tree on the m cycles,
   summed over all m^(m-2) trees.
3. Per tree, the parallelotope volume either as a maximal-minor gcd of its
   generator matrix or as ``prod l_i^(deg_T(i) - 1) * gcd(l)``.

Tree vertices are 0-based cycle indices of the standardized permutation.
"""

from __future__ import annotations

import heapq
import random
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd, prod
from typing import Optional, Sequence

from .exact import maximal_minor_gcd
from .permutations import CycleType, Permutation, cycle_type, standard_form


class VolumeMismatchError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SpanningTree:
    m: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        if self.m < 1:
            raise ValueError("a tree needs at least one vertex")
        if len(edges) != self.m - 1:
            raise ValueError(f"a tree on {self.m} vertices has {self.m - 1} edges, got {len(edges)}")
        parent = list(range(self.m))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for a, b in edges:
            if not (0 <= a < self.m and 0 <= b < self.m) or a == b:
                raise ValueError(f"bad edge {(a, b)}")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise ValueError("edges contain a cycle")
            parent[ra] = rb

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.m
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)


def claw(m: int) -> SpanningTree:
    """Star centred at the last vertex."""
    return SpanningTree(m, tuple((i, m - 1) for i in range(m - 1)))


def prufer_decode(seq: Sequence[int], m: int) -> SpanningTree:
    if m == 1:
        return SpanningTree(1, ())
    degree = [1] * m
    for a in seq:
        degree[a] += 1
    leaves = [i for i in range(m) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for a in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, a))
        degree[a] -= 1
        if degree[a] == 1:
            heapq.heappush(leaves, a)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return SpanningTree(m, tuple(edges))


def prufer_sequence(index: int, m: int) -> tuple[int, ...]:
    """The index-th Prufer sequence of length m-2 in lexicographic order."""
    digits = []
    for _ in range(max(m - 2, 0)):
        index, d = divmod(index, m)
        digits.append(d)
    return tuple(reversed(digits))


def tree_count(m: int) -> int:
    return 1 if m <= 2 else m ** (m - 2)


def spanning_trees(m: int) -> Iterator[SpanningTree]:
    """Every labelled tree on m vertices exactly once, streamed in Prufer order."""
    if m < 1:
        raise ValueError("m must be positive")
    for seq in product(range(m), repeat=max(m - 2, 0)):
        yield prufer_decode(seq, m)


def _as_cycle_type(lam) -> CycleType:
    if isinstance(lam, CycleType):
        return lam
    if isinstance(lam, Permutation):
        return cycle_type(lam)
    return CycleType.from_lengths(lam)


def tree_generator_matrix(lam, tree: SpanningTree) -> list[list[int]]:
    """n x (m-1) matrix whose columns are ``l_k e_j - l_j e_k`` for tree edges jk."""
    lam = _as_cycle_type(lam)
    idx = standard_form(lam).cycle_index()
    l = lam.lengths
    cols = []
    for j, k in tree.edges:
        cols.append([l[k] if c == j else -l[j] if c == k else 0 for c in idx])
    return [list(row) for row in zip(*cols)]


def tree_volume_by_minors(lam, tree: SpanningTree) -> int:
    return maximal_minor_gcd(tree_generator_matrix(lam, tree))


def tree_volume_by_degrees(lam, tree: SpanningTree) -> int:
    lam = _as_cycle_type(lam)
    l = lam.lengths
    return prod(l[i] ** (d - 1) for i, d in enumerate(tree.degrees())) * gcd(*l)


def tree_parallelotope_volume(lam, tree: SpanningTree) -> int:
    """Parallelotope volume for one tree, computed both ways and cross-checked."""
    lam = _as_cycle_type(lam)
    if tree.m != lam.m:
        raise ValueError(f"tree has {tree.m} vertices but the cycle type has {lam.m} parts")
    if lam.m < 2:
        raise ValueError("parallelotope volumes need at least two cycles")
    by_minors = tree_volume_by_minors(lam, tree)
    by_degrees = tree_volume_by_degrees(lam, tree)
    if by_minors != by_degrees:
        raise VolumeMismatchError(
            f"tree {tree.edges} on {lam}: minor gcd {by_minors} != degree formula {by_degrees}")
    return by_minors


def _tiling_chunk(lengths: tuple[int, ...], start: int, stop: int,
                  check_fraction: float, seed: Optional[int]) -> int:
    lam = CycleType(lengths)
    m = lam.m
    rng = random.Random(None if seed is None else f"{seed}:{start}")
    total = 0
    for index in range(start, stop):
        tree = prufer_decode(prufer_sequence(index, m), m)
        if check_fraction and rng.random() < check_fraction:
            total += tree_parallelotope_volume(lam, tree)
        else:
            total += tree_volume_by_degrees(lam, tree)
    return total


def volume_by_tiling(lam, check_fraction: float = 0.0, workers: int = 1,
                     seed: Optional[int] = None) -> int:
    """Sum of parallelotope volumes over all spanning trees on the m cycles.

    Per-tree volumes use the degree formula; a random ``check_fraction`` of
    trees (1.0 for all) is also pushed through the minor-gcd route and any
    disagreement raises :class:`VolumeMismatchError`. With ``workers > 1`` the
    Prufer index range is split across processes.
    """
    lam = _as_cycle_type(lam)
    if lam.m == 1:
        return 1
    total_trees = tree_count(lam.m)
    if workers <= 1 or total_trees < 2 * workers:
        return _tiling_chunk(lam.lengths, 0, total_trees, check_fraction, seed)
    bounds = [total_trees * i // workers for i in range(workers + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_tiling_chunk, lam.lengths, a, b, check_fraction, seed)
                   for a, b in zip(bounds, bounds[1:])]
        return sum(f.result() for f in futures)


def volume_closed_form(lam) -> int:
    lam = _as_cycle_type(lam)
    if lam.m == 1:
        return 1
    return lam.n ** (lam.m - 2) * gcd(*lam.lengths)


def tree_degree_sum(m: int, x: Sequence[int]) -> int:
    """Sum over trees on m vertices of prod x_i^(deg_T(i) - 1)."""
    if len(x) != m:
        raise ValueError("need one weight per vertex")
    total = 0
    for tree in spanning_trees(m):
        total += prod(Fraction(x[i]) ** (d - 1) for i, d in enumerate(tree.degrees()))
    return total


def tree_degree_identity_check(m: int, x: Sequence[int]) -> bool:
    """Check sum_T prod x_i^(deg_T(i)-1) == (x_1 + ... + x_m)^(m-2) exactly."""
    if m < 2:
        raise ValueError("identity is stated for m >= 2")
    return tree_degree_sum(m, x) == sum(x) ** (m - 2)


@dataclass
class VolumeReport:
    cycle_type: CycleType
    closed_form: int
    tiling_sum: Optional[int] = None
    per_tree: list[tuple[SpanningTree, int]] = field(default_factory=list)
    oracle: Optional[Fraction] = None

    @property
    def checks(self) -> dict[str, bool]:
        out = {}
        if self.tiling_sum is not None:
            out["tiling"] = self.tiling_sum == self.closed_form
        if self.per_tree:
            out["per_tree_positive"] = all(v > 0 for _, v in self.per_tree)
        if self.oracle is not None:
            out["oracle"] = self.oracle == self.closed_form
        return out

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def volume_report(lam, verify: str = "none", check_fraction: float = 0.01,
                  workers: int = 1, keep_trees: bool = False) -> VolumeReport:
    """Closed form, plus the tiling sum (``verify="tiling"``) and the Ehrhart oracle (``"full"``)."""
    from .ehrhart import volume_by_interpolation

    if verify not in ("none", "tiling", "full"):
        raise ValueError(f"unknown verify level {verify!r}")
    lam = _as_cycle_type(lam)
    report = VolumeReport(cycle_type=lam, closed_form=volume_closed_form(lam))
    if verify in ("tiling", "full"):
        report.tiling_sum = volume_by_tiling(lam, check_fraction=check_fraction, workers=workers)
        if keep_trees and lam.m >= 2:
            report.per_tree = [(T, tree_parallelotope_volume(lam, T)) for T in spanning_trees(lam.m)]
    if verify == "full":
        report.oracle = volume_by_interpolation(standard_form(lam), workers=workers)
    return report
