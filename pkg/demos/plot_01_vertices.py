"""
Vertices of a fixed slice
=========================

A permutation sigma acts on R^n by moving coordinates around. The points
of the permutahedron that it leaves alone form a smaller polytope whose
vertices are indexed by orderings of the cycles of sigma.

"""

from permafix.exact import format_rational
from permafix.permutations import parse_permutation
from permafix.fixed_polytope import (
    FixedPolytope,
    orbit_average,
    sigma_vertices_by_averaging,
)

# three cycles of lengths 4, 3 and 2
sigma = parse_permutation("(1234)(567)(89)", 9)
poly = FixedPolytope.of(sigma)
print("sigma =", sigma, " dimension", poly.dimension)

###############################################################################
# Each vertex fills the cycles, in the chosen order, with consecutive
# values and replaces each block by its mean.

for v in poly.vertices:
    order = "<".join(str(k + 1) for k in v.order)
    print(f"{order:8s}", " ".join(format_rational(x) for x in v.point))

###############################################################################
# The same six points come out of averaging the sigma-standard
# permutations over the group generated by sigma.

assert {v.point for v in poly.vertices} == {v.point for v in sigma_vertices_by_averaging(sigma)}

# averaging the identity gives the vertex for the natural order
print("average of 1..9:", [format_rational(x) for x in orbit_average(sigma, range(1, 10))])

###############################################################################
# A single transposition in S_4 leaves a hexagon.

hexagon = FixedPolytope.of(parse_permutation("(12)", 4))
print("(12) in S_4:", len(hexagon.vertices), "vertices, dimension", hexagon.dimension)
