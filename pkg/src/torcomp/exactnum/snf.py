"""Smith normal form over Z with unimodular transforms.

smith_normal_form(m) returns (D, U, V) with U*m*V = D, the diagonal of D
nonnegative with d1 | d2 | ... | dr, and det(U), det(V) = +-1.

Pivot selection is the minimal nonzero absolute value in the working block;
elimination is gcd-based (Euclidean row/column combinations). Total on all
integer matrices, including empty and zero ones.
"""

from .matrix import Matrix
from .rings import ZZ


def _min_abs_pivot(a, s, rows, cols):
    best = None
    where = None
    for i in range(s, rows):
        ai = a[i]
        for j in range(s, cols):
            x = ai[j]
            if x != 0:
                ax = -x if x < 0 else x
                if best is None or ax < best:
                    best, where = ax, (i, j)
                    if best == 1:
                        return where
    return where


def smith_normal_form(m):
    """Return (D, U, V) with U*m*V = D in Smith normal form."""
    if m.ring != ZZ:
        raise ValueError("smith_normal_form requires an integer matrix")
    rows, cols = m.rows, m.cols
    a = [list(r) for r in m.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    def swap_rows(i1, i2):
        a[i1], a[i2] = a[i2], a[i1]
        u[i1], u[i2] = u[i2], u[i1]

    def swap_cols(j1, j2):
        for r in a:
            r[j1], r[j2] = r[j2], r[j1]
        for r in v:
            r[j1], r[j2] = r[j2], r[j1]

    def add_row(dst, src, c):
        # row[dst] += c * row[src]
        adst, asrc = a[dst], a[src]
        for j in range(cols):
            adst[j] += c * asrc[j]
        udst, usrc = u[dst], u[src]
        for j in range(rows):
            udst[j] += c * usrc[j]

    def add_col(dst, src, c):
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    s = 0
    n = min(rows, cols)
    while s < n:
        where = _min_abs_pivot(a, s, rows, cols)
        if where is None:
            break
        pi, pj = where
        if pi != s:
            swap_rows(s, pi)
        if pj != s:
            swap_cols(s, pj)

        dirty = True
        while dirty:
            dirty = False
            # Clear column s below the pivot.
            for i in range(s + 1, rows):
                if a[i][s] != 0:
                    q = a[i][s] // a[s][s]
                    add_row(i, s, -q)
                    if a[i][s] != 0:
                        # Remainder became the new, smaller pivot.
                        swap_rows(s, i)
                        dirty = True
            # Clear row s right of the pivot.
            for j in range(s + 1, cols):
                if a[s][j] != 0:
                    q = a[s][j] // a[s][s]
                    add_col(j, s, -q)
                    if a[s][j] != 0:
                        swap_cols(s, j)
                        dirty = True

        # Pivot now divides its row and column; enforce divisibility into the
        # remaining block by folding a bad entry into column s and retrying.
        bad = None
        for i in range(s + 1, rows):
            ai = a[i]
            for j in range(s + 1, cols):
                if ai[j] % a[s][s] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(s, bad, 1)
            continue

        if a[s][s] < 0:
            negate_row(s)
        s += 1

    D = Matrix(ZZ, a)
    U = Matrix(ZZ, u)
    V = Matrix(ZZ, v)
    return D, U, V


def invariant_factors(m):
    """Nontrivial invariant factors d1 | d2 | ... (excluding 1s and 0s kept separate).

    Returns (factors, rank) where factors are the diagonal entries > 1 and
    rank is the number of nonzero diagonal entries.
    """
    D, _, _ = smith_normal_form(m)
    diag = [D[i, i] for i in range(min(D.rows, D.cols))]
    nonzero = [d for d in diag if d != 0]
    return [d for d in nonzero if d != 1], len(nonzero)
