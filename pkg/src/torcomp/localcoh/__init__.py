"""Torsion, local cohomology, Cech tables, and derived completion towers."""

from .towers import Tower, lim_lim1
from .torsion import torsion_graded, torsion_abelian, torsion_plocal
from .cohomology import local_cohomology, cech_tables_from_koszul
from .completion import derived_completion_tower, local_homology_hom_route

__all__ = [
    "Tower", "lim_lim1",
    "torsion_graded", "torsion_abelian", "torsion_plocal",
    "local_cohomology", "cech_tables_from_koszul",
    "derived_completion_tower", "local_homology_hom_route",
]
