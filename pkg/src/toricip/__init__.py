"""Exact group relaxations of integer programs.

Regular triangulations, toric Groebner bases, standard-pair decompositions,
group relaxations, Hilbert-basis normality tests, and a brute-force geometric
oracle that cross-checks every algebraic result.  All arithmetic is exact.
"""

from .core import (
    IntMatrix,
    LatticeBasis,
    face_determinant,
    gcd_maximal_minors,
    kernel_lattice_basis,
)
from .groebner import CostOrder, GroebnerBasis, is_generic, solve_ip, toric_groebner
from .hilbert import gomory_cost, hilbert_basis, normality_report, sharp_family
from .oracle import (
    IneqPolytope,
    brute_force_standard_pairs,
    enumerate_lattice_points,
    fiber_solve,
    is_standard_polytope,
    kannan_bound,
    width_along,
)
from .relax import build_relaxation, solve_relaxation, solve_via_standard_pairs
from .stdpairs import (
    Decomposition,
    MonomialIdeal,
    StandardPair,
    associated_report,
    initial_ideal,
    is_gomory_family,
    relaxations_solving,
    standard_pair_decomposition,
)
from .triangulation import (
    RegularSubdivision,
    optimal_face,
    regular_subdivision,
    unimodularity_report,
)

__all__ = [
    "IntMatrix",
    "LatticeBasis",
    "kernel_lattice_basis",
    "gcd_maximal_minors",
    "face_determinant",
    "RegularSubdivision",
    "regular_subdivision",
    "optimal_face",
    "unimodularity_report",
    "CostOrder",
    "GroebnerBasis",
    "toric_groebner",
    "is_generic",
    "solve_ip",
    "MonomialIdeal",
    "StandardPair",
    "Decomposition",
    "initial_ideal",
    "standard_pair_decomposition",
    "associated_report",
    "is_gomory_family",
    "relaxations_solving",
    "build_relaxation",
    "solve_relaxation",
    "solve_via_standard_pairs",
    "IneqPolytope",
    "enumerate_lattice_points",
    "fiber_solve",
    "is_standard_polytope",
    "brute_force_standard_pairs",
    "width_along",
    "kannan_bound",
    "hilbert_basis",
    "normality_report",
    "gomory_cost",
    "sharp_family",
]
