"""Graded polynomial rings over F_p or Q: Groebner bases, syzygies, resolutions,
graded Hom/Ext/Tor, Hilbert functions."""

from .ring import RingDescriptor, Poly
from .modules import FreeModuleElement, FgGradedModule, ModuleMap
from .groebner import groebner_basis, normal_form, syzygies, submodule_membership
from .resolution import free_resolution, FreeResolution, minimal_generators
from .homalg import hilbert_function, ext_modules, tor_modules, ext_dimension_tables, tor_dimension_tables
from . import io

__all__ = [
    "RingDescriptor", "Poly", "FreeModuleElement", "FgGradedModule", "ModuleMap",
    "groebner_basis", "normal_form", "syzygies", "submodule_membership",
    "free_resolution", "FreeResolution", "minimal_generators",
    "hilbert_function", "ext_modules", "tor_modules",
    "ext_dimension_tables", "tor_dimension_tables", "io",
]
