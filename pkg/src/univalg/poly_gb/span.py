"""Row spans in R^n: membership with certificates and syzygies.

Over Euclidean rings this runs through the Smith form; over polynomial
rings with field coefficients it runs through a module Gröbner basis.
"""

from ..ring_core.matrix import Matrix
from ..ring_core.rings import CapabilityError
from ..ring_core.snf import smith_decomposition


class RowSpan:
    """Submodule of ``R^rank`` spanned by ``rows``."""

    def __init__(self, ring, rows, rank):
        self.ring = ring
        self.rank = rank
        self.rows = [tuple(ring(x) for x in r) for r in rows]
        for r in self.rows:
            if len(r) != rank:
                raise ValueError(f"row of length {len(r)} in a span of rank {rank}")
        if ring.is_euclidean:
            self._impl = _SmithSpan(ring, self.rows, rank)
        elif ring.is_groebner:
            from .modgb import GroebnerSpan
            self._impl = GroebnerSpan(ring, self.rows, rank)
        else:
            raise CapabilityError(f"spans need a euclidean or groebner ring, got {ring}")

    def lift(self, w):
        """Coefficients ``c`` with ``sum c_i*rows_i == w``, or None if ``w`` is outside."""
        w = tuple(self.ring(x) for x in w)
        if not self.rows:
            return () if not any(w) else None
        return self._impl.lift(w)

    def contains(self, w):
        return self.lift(w) is not None

    def syzygies(self):
        """Generating rows of ``{c : sum c_i*rows_i == 0}``."""
        if not self.rows:
            return []
        return [self._canonical(s) for s in self._impl.syzygies()]

    def _canonical(self, row):
        # scale so the first nonzero entry is in canonical form (positive, monic)
        R = self.ring
        for a in row:
            if a:
                _, unit = R.normalize(a)
                if unit != R.one:
                    w = R.inv(unit)
                    return tuple(w * b for b in row)
                break
        return tuple(row)


class _SmithSpan:
    def __init__(self, ring, rows, rank):
        self.ring = ring
        self.k = len(rows)
        self.n = rank
        if rows:
            A = Matrix._raw(ring, rows, rank)
            self.U, self.D, self.W, _, _, self.r = smith_decomposition(A)

    def lift(self, w):
        R = self.ring
        z = self.W.apply_row(w)
        y = [R.zero] * self.k
        for i in range(self.r):
            q = R.exact_div(z[i], self.D[i, i])
            if q is None:
                return None
            y[i] = q
        if any(z[i] for i in range(self.r, self.n)):
            return None
        return self.U.apply_row(tuple(y))

    def syzygies(self):
        return [self.U.row(i) for i in range(self.r, self.k)]
