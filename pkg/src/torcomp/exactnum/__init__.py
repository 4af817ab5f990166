"""Exact scalars (bigint, rational, prime field) and the matrix kernels built on them."""

from .rings import ZZ, QQ, GF, Ring
from .matrix import Matrix
from .snf import smith_normal_form, invariant_factors
from .linalg import (
    rank_and_kernel,
    kernel_integer,
    solve_integer,
    in_lattice,
    cokernel_decomposition,
)

__all__ = [
    "ZZ", "QQ", "GF", "Ring", "Matrix",
    "smith_normal_form", "invariant_factors",
    "rank_and_kernel", "kernel_integer", "solve_integer", "in_lattice",
    "cokernel_decomposition",
]
