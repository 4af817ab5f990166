"""Bounded chain complexes over the graded-polynomial and abelian backends;
Koszul and Cech constructions; weak-proregularity detection."""

from .zmodules import ZModule, ZModuleMap
from .chain import GradedChainComplex, AbelianChainComplex
from .koszul import (koszul, koszul_transition, koszul_dual_transition,
                     koszul_dual_transition_abelian, hom_complex,
                     hom_complex_abelian, tensor_complex,
                     tensor_complex_abelian, cech_plocal, KoszulObject,
                     self_duality_check)
from .proreg import weak_proregularity_check

__all__ = [
    "ZModule", "ZModuleMap", "GradedChainComplex", "AbelianChainComplex",
    "koszul", "koszul_transition", "koszul_dual_transition",
    "koszul_dual_transition_abelian", "hom_complex", "hom_complex_abelian",
    "tensor_complex", "tensor_complex_abelian", "cech_plocal", "KoszulObject",
    "self_duality_check", "weak_proregularity_check",
]
