"""The slice of the permutahedron fixed by a permutation sigma.

The same polytope is built here from several independent descriptions:

* inequalities: the permutahedron's subset-sum inequalities plus equal
  coordinates along each cycle of sigma (:func:`contains`);
* vertices: one point per linear order of the cycles, either from a closed
  formula (:func:`sigma_vertices`) or by averaging sigma-standard
  permutations (:func:`sigma_vertices_by_averaging`);
* a zonotope: integer segments ``l_k e_j - l_j e_k`` over cycle pairs plus a
  half-integral translation (:func:`zonotope_generators`).

Cycle j of sigma always means the j-th cycle in canonical order (0-based in
code), and ``e_j`` is the 0/1 indicator vector of that cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from .exact import rational_vector
from .permutations import (
    CycleType,
    Permutation,
    act,
    cycle_type,
    inv_between,
    sigma_standard_permutations,
)

Point = tuple[Fraction, ...]


def _indicator_sum(sigma: Permutation, per_cycle: Sequence) -> Point:
    """The point equal to ``per_cycle[k]`` on every coordinate of cycle k."""
    idx = sigma.cycle_index()
    return tuple(Fraction(per_cycle[k]) for k in idx)


def orbit_average(sigma: Permutation, w: Sequence) -> Point:
    """Average of the sigma-orbit of w: each cycle's coordinates replaced by their mean."""
    if len(w) != sigma.n:
        raise ValueError(f"point has length {len(w)}, expected {sigma.n}")
    w = rational_vector(w)
    means = [sum(w[a - 1] for a in cyc) / len(cyc) for cyc in sigma.cycles]
    return _indicator_sum(sigma, means)


def orbit_average_by_powers(sigma: Permutation, w: Sequence) -> Point:
    """Same map as :func:`orbit_average`, computed literally as (1/|sigma|) sum sigma^i . w."""
    if len(w) != sigma.n:
        raise ValueError(f"point has length {len(w)}, expected {sigma.n}")
    w = rational_vector(w)
    total = [Fraction(0)] * sigma.n
    current = w
    order = 0
    while True:
        current = act(sigma, current)
        order += 1
        total = [a + b for a, b in zip(total, current)]
        if current == w:
            break
    return tuple(v / order for v in total)


def _check_order(order: Sequence[int], m: int) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(m)):
        raise ValueError(f"{order} is not a total order on {m} cycles")
    return order


def vertex_of_order(sigma: Permutation, order: Sequence[int]) -> Point:
    """Closed-form vertex for a linear order of the cycles (smallest first).

    Cycle k gets the value ``(l_k + 1)/2 + sum of l_j over cycles before k``.
    """
    lengths = [len(c) for c in sigma.cycles]
    order = _check_order(order, len(lengths))
    values = [Fraction(0)] * len(lengths)
    before = 0
    for k in order:
        values[k] = Fraction(lengths[k] + 1, 2) + before
        before += lengths[k]
    return _indicator_sum(sigma, values)


@dataclass(frozen=True)
class OrderedVertex:
    order: tuple[int, ...]
    point: Point


def sigma_vertices(sigma: Permutation) -> list[OrderedVertex]:
    """All m! vertices from the closed formula, one per linear order of cycles."""
    return [OrderedVertex(order, vertex_of_order(sigma, order))
            for order in permutations(range(sigma.m))]


def sigma_vertices_by_averaging(sigma: Permutation) -> list[OrderedVertex]:
    """The same vertices, obtained as orbit averages of sigma-standard permutations."""
    return [OrderedVertex(sp.order, orbit_average(sigma, sp.permutation.one_line))
            for sp in sigma_standard_permutations(sigma)]


def contains(sigma: Permutation, x: Sequence, t: int = 1) -> bool:
    """Membership of x in the t-th dilate of the fixed polytope.

    Checks the coordinate sum, constancy on cycles, and the subset
    inequalities. For the latter only the k smallest coordinates matter for
    each k, so sorted prefix sums replace the 2^n subsets.
    """
    n = sigma.n
    if len(x) != n:
        raise ValueError(f"point has length {len(x)}, expected {n}")
    if not isinstance(t, int) or t < 1:
        raise ValueError("dilate must be a positive integer")
    x = rational_vector(x)
    if sum(x) != t * n * (n + 1) // 2:
        return False
    for cyc in sigma.cycles:
        first = x[cyc[0] - 1]
        if any(x[a - 1] != first for a in cyc):
            return False
    prefix = Fraction(0)
    for k, v in enumerate(sorted(x), start=1):
        prefix += v
        if prefix < t * k * (k + 1) // 2:
            return False
    return True


def contains_bruteforce(sigma: Permutation, x: Sequence, t: int = 1) -> bool:
    """Literal inequality description: every nonempty subset, no shortcuts."""
    n = sigma.n
    if len(x) != n:
        raise ValueError(f"point has length {len(x)}, expected {n}")
    x = rational_vector(x)
    if sum(x) != t * n * (n + 1) // 2:
        return False
    for cyc in sigma.cycles:
        for a, b in combinations(cyc, 2):
            if x[a - 1] != x[b - 1]:
                return False
    for mask in range(1, 1 << n):
        k = bin(mask).count("1")
        s = sum(x[i] for i in range(n) if mask >> i & 1)
        if s < t * k * (k + 1) // 2:
            return False
    return True


def translation_vector(sigma: Permutation) -> Point:
    """Translation of the zonotope: the vertex for the natural cycle order."""
    return vertex_of_order(sigma, range(sigma.m))


def zonotope_generators(sigma: Permutation) -> tuple[list[tuple[int, ...]], Point]:
    """Integer generators ``g_jk = l_k e_j - l_j e_k`` (j < k) and the translation.

    Generators are listed in lexicographic order of (j, k).
    """
    idx = sigma.cycle_index()
    lengths = [len(c) for c in sigma.cycles]
    gens = []
    for j, k in combinations(range(sigma.m), 2):
        gens.append(tuple(lengths[k] if c == j else -lengths[j] if c == k else 0 for c in idx))
    return gens, translation_vector(sigma)


def generator_pairs(m: int) -> list[tuple[int, int]]:
    return list(combinations(range(m), 2))


def cycle_averages(sigma: Permutation, c: Sequence) -> tuple[Fraction, ...]:
    """Per-cycle mean of a linear functional's coefficients."""
    c = rational_vector(c)
    return tuple(sum(c[a - 1] for a in cyc) / len(cyc) for cyc in sigma.cycles)


def induced_order(sigma: Permutation, c: Sequence) -> tuple[int, ...]:
    """Order of cycles by increasing average of c; raises if two averages tie."""
    avgs = cycle_averages(sigma, c)
    if len(set(avgs)) != len(avgs):
        raise ValueError("functional is not generic: two cycle averages coincide")
    return tuple(sorted(range(len(avgs)), key=avgs.__getitem__))


def maximizing_vertex(sigma: Permutation, c: Sequence) -> Point:
    """Vertex of the zonotope maximizing c, built segment by segment.

    Each segment ``[l_j e_k, l_k e_j]`` contributes the endpoint with larger
    c-value; the half-integral offsets ``(l_k + 1)/2`` are added at the end.
    """
    avgs = cycle_averages(sigma, c)
    if len(set(avgs)) != len(avgs):
        raise ValueError("functional is not generic: two cycle averages coincide")
    lengths = [len(cyc) for cyc in sigma.cycles]
    per_cycle = [Fraction(l + 1, 2) for l in lengths]
    for j, k in combinations(range(sigma.m), 2):
        if avgs[j] > avgs[k]:
            per_cycle[j] += lengths[k]
        else:
            per_cycle[k] += lengths[j]
    return _indicator_sum(sigma, per_cycle)


def inversion_decomposition(sigma: Permutation, tau: Permutation) -> dict[tuple[int, int], Fraction]:
    """Coefficients ``alpha_jk = inv_jk(tau) / (l_j l_k)`` expressing avg(tau) - avg(id).

    Requires a standardized sigma, so that position order agrees with cycle
    order and every cross-cycle inversion points along ``+g_jk``.
    """
    if tau.n != sigma.n:
        raise ValueError("degree mismatch")
    if not sigma.is_standardized():
        raise ValueError("sigma must be in standardized form")
    table = inv_between(tau, sigma)
    lengths = [len(c) for c in sigma.cycles]
    return {(j, k): Fraction(table[j][k], lengths[j] * lengths[k])
            for j, k in combinations(range(sigma.m), 2)}


def combine_generators(sigma: Permutation, alpha: dict[tuple[int, int], Fraction]) -> Point:
    """``translation + sum alpha_jk g_jk`` as an exact point."""
    gens, shift = zonotope_generators(sigma)
    point = list(shift)
    for (jk, g) in zip(generator_pairs(sigma.m), gens):
        a = alpha.get(jk, 0)
        if a:
            point = [p + a * gi for p, gi in zip(point, g)]
    return tuple(point)


def dimension(sigma: Permutation) -> int:
    return sigma.m - 1


@dataclass(frozen=True)
class FixedPolytope:
    sigma: Permutation
    cycle_type: CycleType
    vertices: tuple[OrderedVertex, ...]
    generators: tuple[tuple[int, ...], ...]
    translation: Point
    dimension: int

    @classmethod
    def of(cls, sigma: Permutation) -> "FixedPolytope":
        gens, shift = zonotope_generators(sigma)
        return cls(
            sigma=sigma,
            cycle_type=cycle_type(sigma),
            vertices=tuple(sigma_vertices(sigma)),
            generators=tuple(gens),
            translation=shift,
            dimension=dimension(sigma),
        )

    def contains(self, x: Sequence, t: int = 1) -> bool:
        return contains(self.sigma, x, t)
