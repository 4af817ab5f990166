"""Dense matrices over an exact ring.

Entries are stored as a tuple of row tuples, so matrices are immutable and
safe to share between threads (the concurrency contract for this module).
"""

from .rings import ZZ


class Matrix:
    __slots__ = ("ring", "rows", "cols", "entries")

    def __init__(self, ring, entries, cols=None):
        entries = tuple(tuple(ring.coerce(x) for x in row) for row in entries)
        if entries:
            ncols = len(entries[0])
            if any(len(row) != ncols for row in entries):
                raise ValueError("ragged rows")
        else:
            ncols = cols or 0  # keep the width of empty (0-row) matrices
        self.ring = ring
        self.rows = len(entries)
        self.cols = ncols
        self.entries = entries

    # -- constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, ring, rows, cols):
        z = ring.zero()
        return cls(ring, [[z] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero(), ring.one()
        return cls(ring, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, ring, columns, nrows=None):
        if not columns:
            return cls.zeros(ring, nrows or 0, 0)
        nrows = len(columns[0])
        return cls(ring, [[col[i] for col in columns] for i in range(nrows)],
                   cols=len(columns))

    # -- access ------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    # -- arithmetic ---------------------------------------------------------
    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} * {other.shape}")
        R = self.ring
        out = []
        for i in range(self.rows):
            row = []
            srow = self.entries[i]
            for j in range(other.cols):
                acc = R.zero()
                for k in range(self.cols):
                    a = srow[k]
                    if a != R.zero():
                        acc = R.add(acc, R.mul(a, other.entries[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(R, out, cols=other.cols)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        R = self.ring
        return Matrix(R, [[R.add(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        R = self.ring
        return Matrix(R, [[R.sub(a, b) for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        R = self.ring
        return Matrix(R, [[R.neg(a) for a in row] for row in self.entries])

    def scale(self, c):
        R = self.ring
        c = R.coerce(c)
        return Matrix(R, [[R.mul(c, a) for a in row] for row in self.entries])

    def transpose(self):
        return Matrix(self.ring, [self.column(j) for j in range(self.cols)],
                      cols=self.rows)

    def apply_vector(self, v):
        """Matrix-vector product (v a sequence of scalars)."""
        R = self.ring
        v = [R.coerce(x) for x in v]
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        out = []
        for i in range(self.rows):
            acc = R.zero()
            for k in range(self.cols):
                acc = R.add(acc, R.mul(self.entries[i][k], v[k]))
            out.append(acc)
        return out

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return Matrix(self.ring, [r1 + r2 for r1, r2 in zip(self.entries, other.entries)])

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("col mismatch")
        return Matrix(self.ring, self.entries + other.entries)

    def to_ring(self, ring):
        return Matrix(ring, self.entries)

    # -- predicates ----------------------------------------------------------
    @property
    def shape(self):
        return (self.rows, self.cols)

    def is_zero(self):
        z = self.ring.zero()
        return all(a == z for row in self.entries for a in row)

    def __eq__(self, other):
        return (isinstance(other, Matrix) and self.ring == other.ring
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.ring, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in row) for row in self.entries)
        return f"Matrix({self.ring}, {self.rows}x{self.cols}: [{body}])"


def det_sign_unimodular(m):
    """Determinant of an integer matrix via fraction-free expansion; used only
    to assert unimodularity of small transform matrices in tests."""
    if m.ring != ZZ:
        raise ValueError("integer matrices only")
    n = m.rows
    if n != m.cols:
        raise ValueError("square required")
    a = [list(r) for r in m.entries]
    # Bareiss determinant (divisions are exact).
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
