"""Extended gcd, Smith normal form and linear solving over Euclidean rings."""

from collections import namedtuple

from .matrix import Matrix
from .rings import EUCLIDEAN, GROEBNER, CapabilityError

SmithForm = namedtuple("SmithForm", "U D V invariant_factors")
LinearSolution = namedtuple("LinearSolution", "particular kernel")


def gcd_bezout(ring, a, b):
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` canonical.

    ``g`` is the non-negative gcd over ZZ and the monic gcd over K[x].
    """
    ring.require(EUCLIDEAN, "gcd_bezout")
    a, b = ring(a), ring(b)
    if not a and not b:
        return ring.zero, ring.zero, ring.zero
    x, next_x = ring.one, ring.zero
    y, next_y = ring.zero, ring.one
    g, next_g = a, b
    while next_g:
        q, r = ring.divmod(g, next_g)
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, r
    g, unit = ring.normalize(g)
    w = ring.inv(unit)
    return g, x * w, y * w


class _Smith:
    """Mutable working state for one Smith reduction.

    Keeps ``U``, ``V`` and their inverses in step with every elementary
    operation so that ``U*A*V == D`` and ``U*U_inv == I`` at all times.
    """

    def __init__(self, A):
        R = A.ring
        self.R = R
        self.m, self.n = A.shape
        self.A = [list(r) for r in A.rows]
        self.U = [[R.one if i == j else R.zero for j in range(self.m)] for i in range(self.m)]
        self.Ui = [row[:] for row in self.U]
        self.V = [[R.one if i == j else R.zero for j in range(self.n)] for i in range(self.n)]
        self.Vi = [row[:] for row in self.V]

    # row_i += c*row_j
    def add_row(self, i, j, c):
        A, U, Ui = self.A, self.U, self.Ui
        A[i] = [a + c * b for a, b in zip(A[i], A[j])]
        U[i] = [a + c * b for a, b in zip(U[i], U[j])]
        for row in Ui:
            row[j] = row[j] - c * row[i]

    def swap_rows(self, i, j):
        if i == j:
            return
        for M in (self.A, self.U):
            M[i], M[j] = M[j], M[i]
        for row in self.Ui:
            row[i], row[j] = row[j], row[i]

    def scale_row(self, i, w):
        winv = self.R.inv(w)
        self.A[i] = [w * a for a in self.A[i]]
        self.U[i] = [w * a for a in self.U[i]]
        for row in self.Ui:
            row[i] = row[i] * winv

    # col_j += c*col_i
    def add_col(self, j, i, c):
        for row in self.A:
            row[j] = row[j] + c * row[i]
        for row in self.V:
            row[j] = row[j] + c * row[i]
        Vi = self.Vi
        Vi[i] = [a - c * b for a, b in zip(Vi[i], Vi[j])]

    def swap_cols(self, i, j):
        if i == j:
            return
        for M in (self.A, self.V):
            for row in M:
                row[i], row[j] = row[j], row[i]
        self.Vi[i], self.Vi[j] = self.Vi[j], self.Vi[i]

    def pivot(self, t, whole):
        """Smallest-norm nonzero entry; ties go to the earliest (row, col)."""
        R, A = self.R, self.A
        best = None
        if whole:
            cells = ((i, j) for i in range(t, self.m) for j in range(t, self.n))
        else:
            cells = [(t, j) for j in range(t, self.n)] + [(i, t) for i in range(t + 1, self.m)]
            cells.sort()
        for i, j in cells:
            a = A[i][j]
            if a:
                key = (R.norm(a), i, j)
                if best is None or key < best:
                    best = key
        return None if best is None else best[1:]

    def run(self):
        R, A = self.R, self.A
        t = 0
        while t < min(self.m, self.n):
            p = self.pivot(t, whole=True)
            if p is None:
                break
            while True:
                i, j = p
                self.swap_rows(t, i)
                self.swap_cols(t, j)
                d = A[t][t]
                clean = True
                for i in range(t + 1, self.m):
                    if A[i][t]:
                        q, r = R.divmod(A[i][t], d)
                        if q:
                            self.add_row(i, t, -q)
                        if r:
                            clean = False
                for j in range(t + 1, self.n):
                    if A[t][j]:
                        q, r = R.divmod(A[t][j], d)
                        if q:
                            self.add_col(j, t, -q)
                        if r:
                            clean = False
                if not clean:
                    p = self.pivot(t, whole=False)
                    continue
                # pivot must divide the rest for the divisibility chain
                bad = None
                for i in range(t + 1, self.m):
                    for j in range(t + 1, self.n):
                        if A[i][j] and R.divmod(A[i][j], d)[1]:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                self.add_row(t, bad, R.one)
                p = self.pivot(t, whole=False)
            _, unit = R.normalize(A[t][t])
            if unit != R.one:
                self.scale_row(t, R.inv(unit))
            t += 1
        self.rank = t

    def result(self):
        R = self.R
        mk = lambda rows, n: Matrix._raw(R, rows, n)
        return (mk(self.U, self.m), mk(self.A, self.n), mk(self.V, self.n),
                mk(self.Ui, self.m), mk(self.Vi, self.n))


def smith_decomposition(A):
    """Full Smith data: ``(U, D, V, U_inv, V_inv, rank)``."""
    A.ring.require(EUCLIDEAN, "smith_normal_form")
    s = _Smith(A)
    s.run()
    return s.result() + (s.rank,)


def smith_normal_form(A):
    """Return ``(U, D, V, invariant_factors)`` with ``U*A*V == D``.

    ``D`` is diagonal with canonical entries ``d1 | d2 | ...``; the invariant
    factors are its nonzero diagonal entries, units included.
    """
    U, D, V, _, _, rank = smith_decomposition(A)
    return SmithForm(U, D, V, tuple(D[i, i] for i in range(rank)))


def solve_linear(A, b):
    """Solve ``A*x == b`` for a column ``x``.

    Returns ``LinearSolution(particular, kernel)`` where ``kernel`` is a list
    of column vectors spanning ``{x : A*x == 0}``, or ``None`` when the
    system has no solution over the ring.
    """
    R = A.ring
    b = tuple(R(x) for x in b)
    if len(b) != A.nrows:
        raise ValueError(f"right-hand side of length {len(b)} for a {A.shape} system")
    if R.is_euclidean:
        return _solve_euclidean(A, b)
    if R.is_groebner:
        from ..poly_gb.modgb import solve_columns
        return solve_columns(A, b)
    raise CapabilityError(f"solve_linear needs a euclidean or groebner ring, got {R}")


def _solve_euclidean(A, b):
    R = A.ring
    U, D, V, _, _, r = smith_decomposition(A)
    c = U.apply_col(b)
    y = [R.zero] * A.ncols
    for i in range(r):
        q = R.exact_div(c[i], D[i, i])
        if q is None:
            return None
        y[i] = q
    if any(c[i] for i in range(r, A.nrows)):
        return None
    x = V.apply_col(tuple(y))
    kernel = [V.col(j) for j in range(r, A.ncols)]
    return LinearSolution(x, kernel)
