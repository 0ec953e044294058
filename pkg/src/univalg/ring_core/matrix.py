"""Dense matrices over an exact ring.

Rows are tuples of ring elements.  The shape is stored explicitly so that
matrices with zero rows or zero columns still know their other dimension,
which matters for maps out of or into the zero module.
"""


class Matrix:
    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring, rows, ncols=None):
        rows = tuple(tuple(ring(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise ValueError(f"ragged matrix: expected {ncols} columns, got {len(row)}")
        self.ring = ring
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def _raw(cls, ring, rows, ncols):
        # rows already converted and rectangular
        m = cls.__new__(cls)
        m.ring = ring
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, ring, m, n):
        z = ring.zero
        return cls._raw(ring, [(z,) * n for _ in range(m)], n)

    @classmethod
    def identity(cls, ring, n):
        z, o = ring.zero, ring.one
        return cls._raw(ring, [tuple(o if i == j else z for j in range(n)) for i in range(n)], n)

    @classmethod
    def diag(cls, ring, entries, m=None, n=None):
        entries = [ring(e) for e in entries]
        m = len(entries) if m is None else m
        n = len(entries) if n is None else n
        rows = [[ring.zero] * n for _ in range(m)]
        for i, e in enumerate(entries):
            rows[i][i] = e
        return cls._raw(ring, rows, n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i):
        return self.rows[i]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def transpose(self):
        return Matrix._raw(self.ring, [self.col(j) for j in range(self.ncols)], self.nrows)

    T = property(transpose)

    def __add__(self, other):
        self._same_shape(other)
        return Matrix._raw(self.ring, [tuple(a + b for a, b in zip(r, s))
                                       for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix._raw(self.ring, [tuple(a - b for a, b in zip(r, s))
                                       for r, s in zip(self.rows, other.rows)], self.ncols)

    def __neg__(self):
        return Matrix._raw(self.ring, [tuple(-a for a in r) for r in self.rows], self.ncols)

    def scale(self, c):
        return Matrix._raw(self.ring, [tuple(c * a for a in r) for r in self.rows], self.ncols)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.col(j) for j in range(other.ncols)]
        zero = self.ring.zero
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for c in cols:
                s = zero
                for k, a in nz:
                    b = c[k]
                    if b:
                        s = s + a * b
                row.append(s)
            out.append(tuple(row))
        return Matrix._raw(self.ring, out, other.ncols)

    def apply_row(self, v):
        """Row vector times matrix: ``v * self``."""
        if len(v) != self.nrows:
            raise ValueError(f"vector of length {len(v)} against {self.shape} matrix")
        out = [self.ring.zero] * self.ncols
        for a, r in zip(v, self.rows):
            if a:
                for j, b in enumerate(r):
                    if b:
                        out[j] = out[j] + a * b
        return tuple(out)

    def apply_col(self, v):
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise ValueError(f"vector of length {len(v)} against {self.shape} matrix")
        zero = self.ring.zero
        out = []
        for r in self.rows:
            s = zero
            for a, b in zip(r, v):
                if a and b:
                    s = s + a * b
            out.append(s)
        return tuple(out)

    def is_zero(self):
        return all(not a for r in self.rows for a in r)

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s))

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(self.ring.render(a) for a in r) + "]" for r in self.rows)
        return f"Matrix({self.ring}, {self.nrows}x{self.ncols}, [{body}])"


def hstack(*mats):
    ring = mats[0].ring
    m = mats[0].nrows
    if any(M.nrows != m for M in mats):
        raise ValueError("hstack needs equal row counts")
    rows = [sum((M.rows[i] for M in mats), ()) for i in range(m)]
    return Matrix._raw(ring, rows, sum(M.ncols for M in mats))


def vstack(*mats):
    ring = mats[0].ring
    n = mats[0].ncols
    if any(M.ncols != n for M in mats):
        raise ValueError("vstack needs equal column counts")
    return Matrix._raw(ring, [r for M in mats for r in M.rows], n)


def block_diag(*mats):
    ring = mats[0].ring
    total = sum(M.ncols for M in mats)
    z = ring.zero
    rows = []
    offset = 0
    for M in mats:
        for r in M.rows:
            rows.append((z,) * offset + r + (z,) * (total - offset - M.ncols))
        offset += M.ncols
    return Matrix._raw(ring, rows, total)


def kron(A, B):
    """Kronecker product; row index ``i*B.nrows + k``, column ``j*B.ncols + l``."""
    rows = []
    for ra in A.rows:
        for rb in B.rows:
            rows.append(tuple(a * b for a in ra for b in rb))
    return Matrix._raw(A.ring, rows, A.ncols * B.ncols)
