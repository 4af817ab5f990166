"""Hopf algebroid comodules at the abelian level, for the v1 algebroids
(A, A) and (A, A[x]) with x primitive, over A = Z_(p) or F_p."""

from .hopf import HopfAlgebroid
from .comodule import Comodule, ExtendedComodule, LCompleteComodule, cofree
from .hom import hom_comodule
from .cobar import cobar_ext
from .torsion import comodule_torsion
from .limits import comodule_limit
from .iota import iota_pullback, comodule_completion
from . import io

__all__ = [
    "HopfAlgebroid", "Comodule", "ExtendedComodule", "LCompleteComodule",
    "cofree", "hom_comodule", "cobar_ext", "comodule_torsion",
    "comodule_limit", "iota_pullback", "comodule_completion", "io",
]
