"""Rank/kernel over fields and lattice routines over Z.

Everything here reduces to Gauss-Jordan (fields) or Smith normal form (Z).
"""

from .matrix import Matrix
from .snf import smith_normal_form


def _rref(m):
    """Row-reduce a copy of m in place; returns (rows, pivots [(row, col)]).

    Specialized fast paths for prime fields (plain ints mod p) keep the inner
    loops allocation-free.
    """
    R = m.ring
    rows = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    p = getattr(R, "p", None)
    r = 0
    for j in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        rr = rows[r]
        if p is not None:
            inv = pow(rr[j], -1, p)
            for t in range(j, ncols):
                rr[t] = (rr[t] * inv) % p
            for i in range(nrows):
                if i != r:
                    c = rows[i][j]
                    if c:
                        ri = rows[i]
                        for t in range(j, ncols):
                            ri[t] = (ri[t] - c * rr[t]) % p
        else:
            inv = R.div(R.one(), rr[j])
            for t in range(j, ncols):
                rr[t] = R.mul(inv, rr[t])
            for i in range(nrows):
                if i != r:
                    c = rows[i][j]
                    if not R.is_zero(c):
                        ri = rows[i]
                        for t in range(j, ncols):
                            ri[t] = R.sub(ri[t], R.mul(c, rr[t]))
        pivots.append((r, j))
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank_and_kernel(m):
    """(rank, kernel_basis) for a matrix over a field.

    The kernel basis vectors are tuples of field scalars; rank + len(basis)
    equals the number of columns.
    """
    R = m.ring
    if not R.is_field:
        raise ValueError("rank_and_kernel requires a field")
    rows, pivots = _rref(m)
    ncols = m.cols
    pivot_cols = {j for _, j in pivots}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = [R.zero()] * ncols
        vec[f] = R.one()
        for (i, j) in pivots:
            vec[j] = R.neg(rows[i][f])
        basis.append(tuple(vec))
    return len(pivots), basis


def rank_only(m):
    """Rank over a field (no kernel basis)."""
    _, pivots = _rref(m)
    return len(pivots)


def solve_field(m, b):
    """One solution x of m x = b over a field, or None (Gauss on augmented)."""
    R = m.ring
    if not R.is_field:
        raise ValueError("solve_field requires a field")
    rows = [list(r) + [R.coerce(bv)] for r, bv in zip(m.entries, b)]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for j in range(ncols):
        piv = None
        for i in range(r, nrows):
            if not R.is_zero(rows[i][j]):
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = R.div(R.one(), rows[r][j])
        rows[r] = [R.mul(inv, x) for x in rows[r]]
        for i in range(nrows):
            if i != r and not R.is_zero(rows[i][j]):
                c = rows[i][j]
                rows[i] = [R.sub(x, R.mul(c, y)) for x, y in zip(rows[i], rows[r])]
        pivots.append((r, j))
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if not R.is_zero(rows[i][ncols]):
            return None
    x = [R.zero()] * ncols
    for (i, j) in pivots:
        x[j] = rows[i][ncols]
    return x


def kernel_integer(m):
    """Basis (list of int tuples) of the integer kernel {x in Z^cols : m x = 0}.

    The basis spans the kernel as a direct summand of Z^cols (it comes from
    unimodular columns of V), so membership in its span is solvable over Z.
    """
    D, _, V = smith_normal_form(m)
    n = min(D.rows, D.cols)
    zero_positions = [j for j in range(m.cols)
                      if j >= n or D[j, j] == 0]
    return [V.column(j) for j in zero_positions]


def solve_integer(m, b):
    """One integer solution x of m x = b, or None if none exists."""
    D, U, V = smith_normal_form(m)
    ub = U.apply_vector(b)
    y = [0] * m.cols
    n = min(D.rows, D.cols)
    for i in range(m.rows):
        d = D[i, i] if i < n else 0
        if d == 0:
            if i < len(ub) and ub[i] != 0:
                return None
        else:
            q, r = divmod(ub[i], d)
            if r != 0:
                return None
            y[i] = q
    return tuple(V.apply_vector(y))


def in_lattice(vec, basis_columns, n):
    """Is vec in the Z-span of basis_columns (each a length-n int sequence)?"""
    from .rings import ZZ
    if not basis_columns:
        return all(x == 0 for x in vec)
    m = Matrix.from_columns(ZZ, [list(c) for c in basis_columns], n)
    return solve_integer(m, list(vec)) is not None


def cokernel_decomposition(m):
    """Decompose Z^rows / column-span(m) as (free_rank, [invariant factors > 1])."""
    D, _, _ = smith_normal_form(m)
    n = min(D.rows, D.cols)
    diag = [D[i, i] for i in range(n)]
    nonzero = [d for d in diag if d != 0]
    free_rank = m.rows - len(nonzero)
    torsion = [d for d in nonzero if d != 1]
    return free_rank, torsion
