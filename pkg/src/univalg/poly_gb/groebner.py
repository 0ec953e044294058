"""Division, Buchberger completion, ideal membership and syzygies for polynomials."""

from ..ring_core.matrix import Matrix
from ..ring_core.rings import CapabilityError, ZZ
from .modgb import IdealGB, _divides, _sub, _lcm, poly_from_dict
from .polynomial import Polynomial, PolynomialRing
from .span import RowSpan


def _ring_of(items, ring=None):
    if ring is not None:
        return ring
    for x in items:
        if isinstance(x, Polynomial):
            return x.ring
        if isinstance(x, (tuple, list)):
            for y in x:
                if isinstance(y, Polynomial):
                    return y.ring
    return ZZ


def _same_ring(ring, polys):
    out = []
    for p in polys:
        if isinstance(p, Polynomial) and p.ring != ring:
            raise TypeError(f"ring mismatch: {p.ring} vs {ring}")
        out.append(ring(p))
    return out


def reduce(f, G):
    """Multivariate division of ``f`` by the list ``G``.

    Returns ``(r, q)`` with ``f == sum(q_i*G_i) + r`` and no term of ``r``
    divisible by a leading monomial of ``G``.  Divisors are tried in list
    order, so the answer is deterministic but depends on that order.
    """
    if not G:
        raise ValueError("reduce needs at least one divisor")
    R = f.ring
    G = _same_ring(R, G)
    base = R.base
    key = R.key
    leads = [g.leading_term() if g else None for g in G]
    q = [dict() for _ in G]
    p = dict(f.terms)
    r = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for j, (g, lt) in enumerate(zip(G, leads)):
            if lt is not None and _divides(lt[0], e):
                s = _sub(e, lt[0])
                coef = c * base.inv(lt[1])
                q[j][s] = q[j].get(s, base.zero) + coef
                for ge, gc in g.terms.items():
                    t = tuple(a + b for a, b in zip(ge, s))
                    v = p.get(t, base.zero) - coef * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            r[e] = c
            del p[e]
    return Polynomial(R, r), tuple(poly_from_dict(R, d) for d in q)


def s_polynomial(f, g):
    (ef, cf), (eg, cg) = f.leading_term(), g.leading_term()
    L = _lcm(ef, eg)
    R = f.ring
    return R.monomial(_sub(L, ef), R.base.inv(cf)) * f - R.monomial(_sub(L, eg), R.base.inv(cg)) * g


class GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``generators``.

    ``basis`` is monic, auto-reduced and sorted by descending leading
    monomial.  ``transform`` is the matrix with ``basis[i] ==
    sum(transform[i, j] * generators[j])``.
    """

    def __init__(self, generators, ring=None, budget=None):
        R = _ring_of(generators, ring)
        if not isinstance(R, PolynomialRing):
            raise CapabilityError(f"Gröbner bases need a polynomial ring, got {R}")
        R.require("groebner", "buchberger")
        self.ring = R
        self.generators = tuple(_same_ring(R, generators))
        engine = IdealGB(R.base, R.nvars, R.key,
                         [{(0, e): c for e, c in g.terms.items()} for g in self.generators],
                         track=True, budget=budget)
        self._engine = engine
        self.pairs_processed = engine.pairs_processed
        self.basis = tuple(Polynomial(R, {e: c for (_, e), c in v.items()}) for v in engine.basis)
        self.transform = Matrix._raw(
            R, [tuple(poly_from_dict(R, d) for d in rep) for rep in engine.reps], len(self.generators))

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return "{" + ", ".join(str(g) for g in self.basis) + "}"

    def reduce(self, f):
        f = self.ring(f)
        if not self.basis:
            return f, ()
        return reduce(f, list(self.basis))

    def normal_form(self, f):
        return self.reduce(f)[0]

    def contains(self, f):
        return not self.normal_form(f)

    def lift(self, f):
        """Coefficients ``h`` over the generators with ``f == sum h_j*g_j``, or None."""
        f = self.ring(f)
        c = self._engine.lift({(0, e): v for e, v in f.terms.items()})
        if c is None:
            return None
        return tuple(poly_from_dict(self.ring, d) for d in c)

    def is_unit_ideal(self):
        return len(self.basis) == 1 and self.basis[0].is_constant() and bool(self.basis[0])

    def check(self):
        """Buchberger's criterion: every S-polynomial of the basis reduces to 0."""
        B = list(self.basis)
        return all(not reduce(s_polynomial(B[i], B[j]), B)[0]
                   for i in range(len(B)) for j in range(i + 1, len(B)))

    def verify_transform(self):
        T = self.transform
        for i, b in enumerate(self.basis):
            total = self.ring.zero
            for t, g in zip(T.row(i), self.generators):
                total = total + t * g
            if total != b:
                return False
        return True


def buchberger(gens, ring=None, budget=None):
    return GroebnerBasis(gens, ring, budget)


def ideal_membership(f, gens, ring=None):
    """Certificate ``h`` with ``f == sum h_i*gens_i``, or None when ``f`` is not in the ideal.

    Polynomial rings over a field go through Gröbner bases; Euclidean rings
    such as ZZ go through the Smith form.
    """
    R = _ring_of([f, *gens], ring)
    gens = _same_ring(R, gens)
    f = R(f)
    if not gens:
        return () if not f else None
    if isinstance(R, PolynomialRing) and R.is_groebner:
        return GroebnerBasis(gens, R).lift(f)
    span = RowSpan(R, [(g,) for g in gens], 1)
    return span.lift((f,))


def syzygy_basis(gens, ring=None):
    """Rows ``s`` generating ``{s : sum s_i*gens_i == 0}`` as a Matrix.

    ``gens`` are ring elements or equal-length vectors of ring elements.
    """
    gens = list(gens)
    R = _ring_of(gens, ring)
    vectors = [tuple(g) if isinstance(g, (tuple, list)) else (g,) for g in gens]
    rank = len(vectors[0]) if vectors else 1
    vectors = [tuple(_same_ring(R, v)) for v in vectors]
    rows = RowSpan(R, vectors, rank).syzygies()
    return Matrix._raw(R, rows, len(vectors))


def split_coefficients(f, split):
    """Write ``f`` as ``sum c_m * m`` over monomials ``m`` in the ``split`` variables.

    Returns a dict from split exponent tuples to polynomials in the remaining
    variables (the coefficient ring).
    """
    R = f.ring
    split = tuple(split)
    unknown = [v for v in split if v not in R.vars]
    if unknown:
        raise ValueError(f"variables {unknown} are not in {R}")
    outer = [R.vars.index(v) for v in split]
    inner_names = [v for v in R.vars if v not in split]
    inner = [R.vars.index(v) for v in inner_names]
    base = PolynomialRing(R.base, inner_names, R.order) if inner_names else R.base
    parts = {}
    for e, c in f.terms.items():
        m = tuple(e[i] for i in outer)
        parts.setdefault(m, {})[tuple(e[i] for i in inner)] = c
    if inner_names:
        return base, {m: Polynomial(base, d) for m, d in parts.items()}
    return base, {m: d[()] for m, d in parts.items()}


def coefficients_wrt(f, split):
    """Nonzero coefficients of ``f`` viewed as a polynomial in ``split`` over the other variables.

    Ordered by ascending monomial in the split variables.
    """
    _, parts = split_coefficients(f, split)
    return [parts[m] for m in sorted(parts, key=lambda m: (sum(m), m))]
