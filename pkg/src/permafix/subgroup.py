"""Slices fixed by a subgroup generated by several permutations.

A point is fixed by every generator iff it is constant on each block of the
join of the generators' cycle partitions, so one permutation whose cycles are
those blocks fixes exactly the same slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .permutations import Permutation


class UnionFind:
    """Disjoint sets over 1..n with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n + 1))
        self.size = [1] * (n + 1)

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]


@dataclass(frozen=True)
class SetPartition:
    """A set partition of [n]; blocks sorted internally and by their minima."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        object.__setattr__(self, "blocks", blocks)
        if any(not b for b in blocks):
            raise ValueError("blocks must be nonempty")
        flat = [a for b in blocks for a in b]
        if sorted(flat) != list(range(1, self.n + 1)):
            raise ValueError(f"blocks do not partition 1..{self.n}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "SetPartition":
        """Parse ``"137|2|46|5|89"`` (digits) or ``"1,3,7|2|..."`` (separated)."""
        parts = [part.strip() for part in text.split("|")]
        # any separator anywhere means every block is separated, so "12" can be a single element
        separated = any("," in part or " " in part for part in parts)
        if separated:
            blocks = [tuple(int(v) for v in part.replace(",", " ").split()) for part in parts]
        else:
            blocks = [tuple(int(ch) for ch in part) for part in parts]
        size = n if n is not None else sum(len(b) for b in blocks)
        return cls(size, tuple(blocks))

    def block_of(self) -> dict[int, int]:
        return {a: i for i, b in enumerate(self.blocks) for a in b}

    def refines(self, other: "SetPartition") -> bool:
        where = other.block_of()
        return all(len({where[a] for a in b}) == 1 for b in self.blocks)

    def __str__(self):
        sep = "" if self.n <= 9 else ","
        return "|".join(sep.join(map(str, b)) for b in self.blocks)


def cycle_partition(sigma: Permutation) -> SetPartition:
    return SetPartition(sigma.n, sigma.cycles)


def partition_join(parts: Sequence[SetPartition]) -> SetPartition:
    """Finest common coarsening of the given partitions."""
    if not parts:
        raise ValueError("need at least one partition")
    n = parts[0].n
    if any(p.n != n for p in parts):
        raise ValueError("partitions have different ground sets")
    uf = UnionFind(n)
    for p in parts:
        for block in p.blocks:
            for a in block[1:]:
                uf.union(block[0], a)
    groups: dict[int, list[int]] = {}
    for a in range(1, n + 1):
        groups.setdefault(uf.find(a), []).append(a)
    return SetPartition(n, tuple(tuple(g) for g in groups.values()))


def permutation_of_partition(partition: SetPartition) -> Permutation:
    """Each block cycled in ascending order."""
    return Permutation.from_cycles(partition.blocks, partition.n)


def representative_sigma(generators: Iterable[Permutation]) -> Permutation:
    """One permutation whose fixed slice equals the slice fixed by all generators."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators have different degrees")
    return permutation_of_partition(partition_join([cycle_partition(g) for g in gens]))
