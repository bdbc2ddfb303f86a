"""Exact alpha constants of del Pezzo surfaces from the Galois action on their lines."""
from __future__ import annotations

__version__ = "0.1.0"

from .errors import DPAlphaError
from .geometry import (LineConfiguration, WeylAction, enumerate_lines, pairing,
                       reconstruct_gram_from_group, weyl_generators, weyl_group)
from .kernels import BACKEND
from .lattice import coordinates_in_basis, hermite_form, rank, saturation_basis
from .permgroup import PermGroup, are_conjugate, contained_in_conjugate, group_from_generators
from .pipeline import (AlphaResult, alpha_for_subgroup, alpha_singular, invariant_rank,
                       orbit_sums, rho_maximal_reduce, run_degree)
from .polytope import (HPolytope, SymmetrySpec, VPolytope, dimension, monte_carlo_volume,
                       vertex_enumeration, volume)
from .subgroups import SubgroupClassRecord, subgroup_classes

__all__ = [
    "AlphaResult", "BACKEND", "DPAlphaError", "HPolytope", "LineConfiguration", "PermGroup",
    "SubgroupClassRecord", "SymmetrySpec", "VPolytope", "WeylAction", "alpha_for_subgroup",
    "alpha_singular", "are_conjugate", "contained_in_conjugate", "coordinates_in_basis",
    "dimension", "enumerate_lines", "group_from_generators", "hermite_form", "invariant_rank",
    "monte_carlo_volume", "orbit_sums", "pairing", "rank", "reconstruct_gram_from_group",
    "rho_maximal_reduce", "run_degree", "saturation_basis", "subgroup_classes",
    "vertex_enumeration", "volume", "weyl_generators", "weyl_group",
]
