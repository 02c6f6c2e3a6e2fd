"""
Lattice points in dilates
=========================

Vertices of the slice can have half-integer coordinates, so odd dilates
behave differently from even ones. With two cycles the slice is a segment
and the count has a closed form that depends on parities.

"""

from permafix.ehrhart import count_lattice_points, even_part_polynomial, segment_count
from permafix.permutations import Permutation, standard_form

for l1, l2 in [(1, 1), (2, 1), (3, 1), (2, 2), (4, 2), (6, 2)]:
    sigma = standard_form([l1, l2])
    counts = [count_lattice_points(sigma, t) for t in range(1, 9)]
    predicted = [segment_count(l1, l2, t) for t in range(1, 9)]
    assert counts == predicted
    print(f"({l1},{l2})", counts)

###############################################################################
# Lengths 4 and 2 are both even but have different 2-valuations, so no odd
# dilate contains a lattice point.

###############################################################################
# For the hexagon of S_3 the count is the polynomial 3t^2 + 3t + 1; the
# even dilates recover it exactly.

print("coefficients, constant first:", [str(c) for c in even_part_polynomial(Permutation.identity(3))])
