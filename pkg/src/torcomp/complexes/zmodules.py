"""Finitely presented abelian groups (Z-modules) and their maps, via SNF.

ZModule: Z^gens / column-span(rels). All subquotient arithmetic reduces to
integer lattice computations from exactnum.
"""

from ..errors import InputError
from ..exactnum import (Matrix, ZZ, kernel_integer, solve_integer,
                        cokernel_decomposition)


class ZModule:
    __slots__ = ("gens", "rels")

    def __init__(self, gens, rels=None):
        self.gens = gens
        if rels is None or rels.cols == 0:
            rels = Matrix.zeros(ZZ, gens, 0)
        if rels.rows != gens:
            raise InputError("relation matrix has wrong number of rows")
        self.rels = rels

    @classmethod
    def free(cls, rank):
        return cls(rank, None)

    @classmethod
    def cyclic(cls, n):
        return cls(1, Matrix(ZZ, [[n]]))

    def decomposition(self):
        """(free_rank, invariant factors > 1)."""
        if self.rels.cols == 0:
            return self.gens, []
        return cokernel_decomposition(self.rels)

    def is_zero(self):
        free, tors = self.decomposition()
        return free == 0 and not tors

    def contains_in_rel_span(self, vec):
        if all(x == 0 for x in vec):
            return True
        if self.rels.cols == 0:
            return False
        return solve_integer(self.rels, list(vec)) is not None

    def __repr__(self):
        free, tors = self.decomposition()
        parts = [f"Z^{free}"] if free else []
        parts += [f"Z/{t}" for t in tors]
        return " + ".join(parts) if parts else "0"


class ZModuleMap:
    """Map of f.p. abelian groups given by a matrix on free covers."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source, target, matrix, check=True):
        if matrix.shape != (target.gens, source.gens):
            raise InputError(f"matrix shape {matrix.shape} does not match "
                             f"{target.gens}x{source.gens}")
        self.source = source
        self.target = target
        self.matrix = matrix
        if check and source.rels.cols:
            img = matrix * source.rels
            for j in range(img.cols):
                if not target.contains_in_rel_span(img.column(j)):
                    raise InputError("map does not kill a source relation")

    def compose(self, other):
        """self o other."""
        return ZModuleMap(other.source, self.target, self.matrix * other.matrix,
                          check=False)

    def is_zero_map(self):
        for j in range(self.matrix.cols):
            if not self.target.contains_in_rel_span(self.matrix.column(j)):
                return False
        return True


def kernel_lattice(phi):
    """Basis of {x in Z^{source.gens} : phi(x) in span(target rels)}."""
    src, tgt = phi.source, phi.target
    if tgt.rels.cols:
        stacked = phi.matrix.hstack(-tgt.rels)
    else:
        stacked = phi.matrix
    ker = kernel_integer(stacked)
    cols = [v[:src.gens] for v in ker]
    # The projection of a kernel basis generates the projected lattice.
    cols = [c for c in cols if any(x != 0 for x in c)]
    return cols


def homology_at(phi_in, phi_out):
    """H = ker(phi_out) / (im(phi_in) + rels) as a ZModule-style decomposition.

    phi_out: M -> N (None means the zero map out of M);
    phi_in: L -> M (None means zero coming in).
    Returns (free_rank, torsion list, basis columns of the kernel lattice).
    """
    M = phi_out.source if phi_out is not None else phi_in.target
    if phi_out is not None:
        kernel = kernel_lattice(phi_out)
    else:
        kernel = [tuple(1 if i == j else 0 for i in range(M.gens))
                  for j in range(M.gens)]
    if not kernel:
        return 0, [], []
    B = Matrix.from_columns(ZZ, [list(c) for c in kernel], M.gens)
    img_cols = []
    if phi_in is not None:
        img_cols += [phi_in.matrix.column(j) for j in range(phi_in.matrix.cols)]
    img_cols += [M.rels.column(j) for j in range(M.rels.cols)]
    coords = []
    for v in img_cols:
        sol = solve_integer(B, list(v))
        if sol is None:
            raise InputError("image vector not inside the kernel lattice")
        coords.append(list(sol))
    if coords:
        C = Matrix.from_columns(ZZ, coords, len(kernel))
        free, tors = cokernel_decomposition(C)
    else:
        free, tors = len(kernel), []
    return free, tors, kernel


def induced_map_is_zero(chain_map_component, phi_in_target, kernel_basis,
                        target_module):
    """Does a chain map kill homology? kernel_basis: columns spanning the
    source kernel lattice; the induced class of each must die in
    im(phi_in_target) + rels(target)."""
    img_cols = []
    if phi_in_target is not None:
        img_cols += [phi_in_target.matrix.column(j)
                     for j in range(phi_in_target.matrix.cols)]
    img_cols += [target_module.rels.column(j) for j in range(target_module.rels.cols)]
    if img_cols:
        span = Matrix.from_columns(ZZ, [list(c) for c in img_cols],
                                   target_module.gens)
    else:
        span = None
    for b in kernel_basis:
        v = chain_map_component.apply_vector(list(b))
        if span is None:
            if any(x != 0 for x in v):
                return False
        elif solve_integer(span, list(v)) is None:
            return False
    return True
