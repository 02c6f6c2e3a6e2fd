"""Acceptance suite: ten end-to-end criteria, one pass/fail line each.

Run under pytest (the summary lines appear at the end of the session) or
directly with ``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from fractions import Fraction
from math import factorial, gcd

import pytest

from permafix.ehrhart import count_lattice_points, segment_count, volume_by_interpolation
from permafix.fixed_polytope import (
    combine_generators,
    contains,
    contains_bruteforce,
    inversion_decomposition,
    orbit_average,
    sigma_vertices,
    sigma_vertices_by_averaging,
    translation_vector,
)
from permafix.permutations import (
    Permutation,
    all_permutations,
    integer_partitions,
    inv_between,
    inversions,
    parse_permutation,
    standard_form,
)
from permafix.subgroup import cycle_partition, partition_join, representative_sigma
from permafix.volume import tree_degree_identity_check, volume_by_tiling, volume_closed_form

RESULTS: dict[int, tuple[str, bool, str]] = {}


def expected_volume(lengths):
    n, m = sum(lengths), len(lengths)
    return 1 if m == 1 else n ** (m - 2) * gcd(*lengths)


def criterion_1():
    start = time.perf_counter()
    count = 0
    for n in range(2, 8):
        for lam in integer_partitions(n):
            tiled = volume_by_tiling(lam, check_fraction=1.0)
            assert tiled == volume_closed_form(lam) == expected_volume(lam.lengths), lam
            count += 1
    elapsed = time.perf_counter() - start
    assert count == 2 + 3 + 5 + 7 + 11 + 15
    assert elapsed < 60, f"took {elapsed:.1f}s"
    return f"{count} partitions, {elapsed:.1f}s"


def criterion_2():
    lam = (1,) * 7
    assert volume_closed_form(lam) == 16807 == 7 ** 5
    assert volume_by_tiling(lam) == 16807
    return "16807"


def criterion_3():
    start = time.perf_counter()
    count = 0
    for n in range(2, 7):
        for lam in integer_partitions(n):
            v = volume_by_interpolation(standard_form(lam))
            assert isinstance(v, Fraction)
            assert v == volume_closed_form(lam), lam
            count += 1
    elapsed = time.perf_counter() - start
    assert elapsed < 300, f"took {elapsed:.1f}s"
    return f"{count} partitions, {elapsed:.1f}s"


def criterion_4():
    checked = 0
    for n in range(1, 7):
        for lam in integer_partitions(n):
            sigma = standard_form(lam)
            shift = translation_vector(sigma)
            assert shift == orbit_average(sigma, range(1, n + 1))
            for tau in all_permutations(n):
                avg = orbit_average(sigma, tau.one_line)
                assert contains(sigma, avg)
                alpha = inversion_decomposition(sigma, tau)
                assert all(0 <= a <= 1 for a in alpha.values())
                assert combine_generators(sigma, alpha) == avg
                checked += 1
    return f"{checked} (sigma, tau) pairs"


S9_VERTICES = [
    ((10, 4), (18, 3), (17, 2)),
    ((10, 4), (24, 3), (11, 2)),
    ((22, 4), (6, 3), (17, 2)),
    ((18, 4), (24, 3), (3, 2)),
    ((30, 4), (6, 3), (9, 2)),
    ((30, 4), (12, 3), (3, 2)),
]


def criterion_5():
    for n in range(1, 8):
        for lam in integer_partitions(n):
            sigma = standard_form(lam)
            closed = {v.point for v in sigma_vertices(sigma)}
            averaged = {v.point for v in sigma_vertices_by_averaging(sigma)}
            assert len(closed) == factorial(lam.m)
            assert closed == averaged
    sigma = parse_permutation("(1234)(567)(89)", 9)
    listed = {tuple(Fraction(num, l) for num, l in blocks for _ in range(l)) for blocks in S9_VERTICES}
    assert {v.point for v in sigma_vertices(sigma)} == listed
    return "n <= 7 and the six S_9 vertices"


def odd_case(l1, l2):
    if l1 % 2 and l2 % 2:
        return "both odd"
    if l1 % 2 != l2 % 2:
        return "mixed parity"
    v1 = (l1 & -l1).bit_length()
    v2 = (l2 & -l2).bit_length()
    return "even, equal 2-valuation" if v1 == v2 else "even, different 2-valuation"


def criterion_6():
    cases = set()
    zero_seen = False
    for l1 in range(1, 7):
        for l2 in range(1, l1 + 1):
            sigma = standard_form([l1, l2])
            for t in range(1, 13):
                brute = count_lattice_points(sigma, t, "enumerate")
                assert segment_count(l1, l2, t) == brute, (l1, l2, t)
                if t % 2:
                    cases.add(odd_case(l1, l2))
                    zero_seen |= brute == 0
    assert len(cases) == 4, cases
    assert zero_seen
    return "21 pairs x 12 dilates, 4 odd cases"


def criterion_7():
    sigma = parse_permutation("(123)(45)(6)", 6)
    tau = parse_permutation("461352")
    table = inv_between(tau, sigma)
    got = (inversions(tau), table[0][1], table[0][2], table[1][2])
    assert got == (9, 3, 2, 2), got
    return "inv=9, (3,2,2)"


def criterion_8():
    gens = [parse_permutation("(173)(46)(89)", 9), parse_permutation("(27)(68)", 9)]
    join = partition_join([cycle_partition(g) for g in gens])
    sigma = representative_sigma(gens)
    assert str(join) == "1237|4689|5"
    assert sigma == parse_permutation("(1237)(4689)", 9)
    return f"join {join}, sigma {sigma}"


def criterion_9():
    rng = random.Random(9)
    for m in range(2, 7):
        for _ in range(20):
            x = [rng.randint(1, 10) for _ in range(m)]
            assert tree_degree_identity_check(m, x), (m, x)
    return "100 vectors"


def _random_perm(rng, n):
    vals = list(range(1, n + 1))
    rng.shuffle(vals)
    return Permutation(tuple(vals))


def _membership_points(rng, n, count):
    """Mix of interior, vertex, perturbed and arbitrary points, all exact."""
    for _ in range(count):
        sigma = _random_perm(rng, n) if rng.random() < 0.7 else Permutation.identity(n)
        kind = rng.random()
        if kind < 0.1:
            yield sigma, orbit_average(sigma, _random_perm(rng, n).one_line)
            continue
        # convex combination of a few averaged permutations
        weights = [Fraction(rng.randint(1, 9)) for _ in range(rng.randint(1, 4))]
        total = sum(weights)
        point = [Fraction(0)] * n
        for w in weights:
            avg = orbit_average(sigma, _random_perm(rng, n).one_line)
            point = [p + w / total * a for p, a in zip(point, avg)]
        if kind < 0.45:
            yield sigma, tuple(point)
        elif kind < 0.9:
            # move along a sigma-fixed direction of sum zero; may or may not leave the polytope
            i, j = rng.sample(range(n), 2)
            d = [Fraction(0)] * n
            d[i], d[j] = Fraction(1), Fraction(-1)
            step = Fraction(rng.randint(1, 12), rng.randint(1, 6))
            d = orbit_average(sigma, d)
            yield sigma, tuple(p + step * e for p, e in zip(point, d))
        else:
            x = [Fraction(rng.randint(0, 2 * n), rng.randint(1, 3)) for _ in range(n)]
            x[-1] += Fraction(n * (n + 1), 2) - sum(x)
            yield Permutation.identity(n), tuple(x)


def criterion_10():
    rng = random.Random(10)
    summary = []
    for n in range(3, 11):
        inside = outside = 0
        for sigma, x in _membership_points(rng, n, 1000):
            fast = contains(sigma, x)
            assert fast == contains_bruteforce(sigma, x), (sigma, x)
            inside += fast
            outside += not fast
        assert inside >= 100 and outside >= 100, (n, inside, outside)
        summary.append(f"{n}:{inside}/{outside}")
    return "in/out " + " ".join(summary)


CRITERIA = [
    (1, "tiling sum equals closed form for all partitions of n in [2,7]", criterion_1),
    (2, "identity type in S_7 has volume 7^5 = 16807", criterion_2),
    (3, "Ehrhart interpolation equals closed form for n in [2,6]", criterion_3),
    (4, "orbit averages are members and decompose by inversions, n <= 6", criterion_4),
    (5, "m! vertices, both vertex paths agree, S_9 example verbatim", criterion_5),
    (6, "segment formula equals enumeration, l2 <= l1 <= 6, t in [1,12]", criterion_6),
    (7, "inversion fixture (123)(45)(6), 461352", criterion_7),
    (8, "subgroup fixture in S_9", criterion_8),
    (9, "tree-degree identity for m in [2,6]", criterion_9),
    (10, "majorization test equals 2^n subset test, n in [3,10]", criterion_10),
]


def run_criterion(number, title, func):
    try:
        detail = func() or ""
        ok = True
    except AssertionError as exc:
        detail = f"{type(exc).__name__}: {exc}"
        ok = False
    RESULTS[number] = (title, ok, detail)
    return ok, detail


def format_line(number, title, ok, detail):
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  [{detail}]"


@pytest.mark.parametrize("number, title, func", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, func):
    ok, detail = run_criterion(number, title, func)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number, title, func in CRITERIA:
        ok, detail = run_criterion(number, title, func)
        print(format_line(number, title, ok, detail), flush=True)
        failed += not ok
    sys.exit(1 if failed else 0)
