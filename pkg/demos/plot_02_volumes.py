"""
Three ways to a volume
======================

The normalized volume of the slice depends only on the cycle type
(l_1, ..., l_m) and equals n^(m-2) * gcd(l). Here it is computed three
independent ways: the formula, a sum over spanning trees of K_m, and the
leading coefficient of the lattice-point count of even dilates.

"""

from permafix.exact import format_rational
from permafix.ehrhart import volume_by_interpolation
from permafix.permutations import integer_partitions, standard_form
from permafix.volume import spanning_trees, tree_parallelotope_volume, volume_by_tiling, volume_closed_form

print(f"{'type':16s} {'formula':>8s} {'trees':>8s} {'ehrhart':>8s}")
for n in range(2, 6):
    for lam in integer_partitions(n):
        closed = volume_closed_form(lam)
        tiled = volume_by_tiling(lam, check_fraction=1.0)
        oracle = volume_by_interpolation(standard_form(lam))
        name = ",".join(map(str, lam.lengths))
        print(f"{name:16s} {closed:8d} {tiled:8d} {format_rational(oracle):>8s}")

###############################################################################
# The tiling in detail for type (3,2,1): one parallelogram per spanning
# tree of the triangle. The middle vertex of each path sets the area.

for tree in spanning_trees(3):
    edges = ", ".join(f"{a + 1}-{b + 1}" for a, b in tree.edges)
    print(edges, "->", tree_parallelotope_volume((3, 2, 1), tree))

###############################################################################
# The identity in S_7 gives the full permutahedron and 7^5 trees.

print("identity in S_7:", volume_closed_form((1,) * 7))
