"""Exact computations on the fixed polytopes of the permutahedron."""

__version__ = "0.1.0"

from .ehrhart import count_lattice_points, segment_count, volume_by_interpolation
from .fixed_polytope import FixedPolytope, contains, orbit_average, sigma_vertices
from .permutations import CycleType, Permutation, cycle_type, parse_permutation, standard_form
from .subgroup import SetPartition, partition_join, representative_sigma
from .volume import volume_by_tiling, volume_closed_form

__all__ = [
    "CycleType",
    "FixedPolytope",
    "Permutation",
    "SetPartition",
    "contains",
    "count_lattice_points",
    "cycle_type",
    "orbit_average",
    "parse_permutation",
    "partition_join",
    "representative_sigma",
    "segment_count",
    "sigma_vertices",
    "standard_form",
    "volume_by_interpolation",
    "volume_by_tiling",
    "volume_closed_form",
]
