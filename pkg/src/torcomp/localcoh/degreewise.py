"""Per-internal-degree homology spaces with representative tracking.

Everything is finite-dimensional linear algebra over the base field: kernel
of the outgoing matrix, modulo the image of the incoming one, with a
deterministic choice of representatives so induced maps of towers/colimit
systems become honest matrices.
"""

from ..exactnum import Matrix, rank_and_kernel
from ..exactnum.linalg import solve_field
from ..gradedpoly.homalg import standard_basis_in_degree, map_matrix_in_degree


class DegreewiseHomology:
    """H = ker(phi_out)_d / im(phi_in)_d inside the degree-d piece of a module.

    phi_in / phi_out are ModuleMaps (twist 0) or None.
    """

    def __init__(self, module, phi_in, phi_out, d):
        self.module = module
        self.d = d
        self.field = module.ring.field
        self.basis = standard_basis_in_degree(module, d)
        n = len(self.basis)
        if phi_out is not None and n:
            mat_out, _, _ = map_matrix_in_degree(phi_out, d)
            _, ker = rank_and_kernel(mat_out)
            cycle_basis = [list(v) for v in ker]
        else:
            cycle_basis = [[self.field.one() if i == j else self.field.zero()
                            for i in range(n)] for j in range(n)]
        if phi_in is not None and n:
            mat_in, _, _ = map_matrix_in_degree(phi_in, d)
            boundary_cols = [list(mat_in.column(j)) for j in range(mat_in.cols)]
        else:
            boundary_cols = []
        self.boundaries = boundary_cols
        # Pick representatives in one elimination: pivot columns of
        # [boundaries | cycles] beyond the boundary block extend its span.
        from ..exactnum.linalg import _rref
        reps = []
        if n and cycle_basis:
            stacked = Matrix.from_columns(self.field,
                                          boundary_cols + [list(z) for z in cycle_basis], n)
            _, pivots = _rref(stacked)
            nb = len(boundary_cols)
            for (_, j) in pivots:
                if j >= nb:
                    reps.append(list(cycle_basis[j - nb]))
        self.reps = reps
        self.dim = len(reps)
        self._solve_matrix = (Matrix.from_columns(self.field,
                                                  boundary_cols + reps, n)
                              if n and (boundary_cols or reps) else None)

    def reduce(self, vec):
        """Coordinates of a cycle vector in the chosen representatives."""
        if self.dim == 0:
            return []
        sol = solve_field(self._solve_matrix, vec)
        if sol is None:
            raise ValueError("vector is not a cycle modulo boundaries")
        return sol[len(self.boundaries):]


def induced_matrix(src_h, tgt_h, component_map):
    """Matrix of the induced map on homology for a chain-map component."""
    if src_h.dim == 0 or tgt_h.dim == 0:
        return Matrix.zeros(src_h.field, tgt_h.dim, src_h.dim)
    mat, _, _ = map_matrix_in_degree(component_map, src_h.d)
    cols = []
    for r in src_h.reps:
        v = mat.apply_vector(r)
        cols.append(tgt_h.reduce(v))
    return Matrix.from_columns(src_h.field, cols, tgt_h.dim)


def is_isomorphism(src_h, tgt_h, component_map):
    if src_h.dim != tgt_h.dim:
        return False
    if src_h.dim == 0:
        return True
    m = induced_matrix(src_h, tgt_h, component_map)
    r, _ = rank_and_kernel(m)
    return r == src_h.dim
