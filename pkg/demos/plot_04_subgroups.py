"""
Subgroups reduce to one permutation
===================================

The points fixed by a whole subgroup are the points fixed by a single
permutation: join the cycle partitions of the generators and take one
cycle per block.

"""

from permafix.fixed_polytope import FixedPolytope
from permafix.permutations import act, cycle_type, parse_permutation
from permafix.subgroup import cycle_partition, partition_join, representative_sigma
from permafix.volume import volume_closed_form

gens = [parse_permutation("(173)(46)(89)", 9), parse_permutation("(27)(68)", 9)]
for g in gens:
    print(g, "->", cycle_partition(g))

join = partition_join([cycle_partition(g) for g in gens])
sigma = representative_sigma(gens)
print("join:", join)
print("sigma:", sigma, " type", cycle_type(sigma).lengths)

###############################################################################
# Every vertex of the slice for sigma is fixed by both generators.

poly = FixedPolytope.of(sigma)
assert all(act(g, v.point) == v.point for g in gens for v in poly.vertices)
print(len(poly.vertices), "vertices, volume", volume_closed_form(cycle_type(sigma)))
