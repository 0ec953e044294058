"""Finitely presented modules R^g / (row span of relations) and their homomorphisms.

Elements are row vectors of length g; a homomorphism ``M -> N`` is a
``g_M x g_N`` matrix acting on the right, so the matrix of ``g o f`` is
``A_f * A_g``.
"""

from ..poly_gb.span import RowSpan
from ..ring_core.matrix import Matrix, vstack
from ..ring_core.rings import CapabilityError
from ..ring_core.snf import smith_decomposition, smith_normal_form


def _as_matrix(ring, rows, ncols):
    if isinstance(rows, Matrix):
        if rows.ncols != ncols:
            raise ValueError(f"relation matrix has {rows.ncols} columns, expected {ncols}")
        return rows
    return Matrix(ring, list(rows), ncols)


def _nonzero_rows(M):
    return Matrix._raw(M.ring, [r for r in M.rows if any(r)], M.ncols)


class PresentedModule:
    """``R^ngens`` modulo the row span of ``relations``."""

    def __init__(self, ring, ngens, relations=()):
        if ngens < 0:
            raise ValueError("a module needs a non-negative number of generators")
        self.ring = ring
        self.ngens = ngens
        self.relations = _nonzero_rows(_as_matrix(ring, relations, ngens))
        self._span = None

    @classmethod
    def free(cls, ring, n):
        return cls(ring, n)

    @classmethod
    def zero(cls, ring):
        return cls(ring, 0)

    @classmethod
    def cyclic(cls, ring, *annihilators):
        """``R/(a_1, ..., a_k)``."""
        return cls(ring, 1, [(a,) for a in annihilators])

    @property
    def span(self):
        if self._span is None:
            self._span = RowSpan(self.ring, self.relations.rows, self.ngens)
        return self._span

    def vector(self, v):
        v = tuple(self.ring(x) for x in v)
        if len(v) != self.ngens:
            raise ValueError(f"vector of length {len(v)} in a module with {self.ngens} generators")
        return v

    def element(self, coeffs):
        return ModuleElement(self, self.vector(coeffs))

    def gen(self, i):
        R = self.ring
        return ModuleElement(self, tuple(R.one if k == i else R.zero for k in range(self.ngens)))

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    @property
    def zero_element(self):
        return ModuleElement(self, (self.ring.zero,) * self.ngens)

    def is_zero_vector(self, v):
        v = self.vector(v)
        return not any(v) or self.span.contains(v)

    def equal(self, v, w):
        v, w = self.vector(v), self.vector(w)
        return v == w or self.is_zero_vector(tuple(a - b for a, b in zip(v, w)))

    def relation_lift(self, v):
        """Coefficients over the relations expressing ``v``, or None if ``v`` is nonzero in M."""
        return self.span.lift(self.vector(v))

    def is_zero(self):
        return all(self.is_zero_vector(g.coeffs) for g in self.gens())

    def is_free_presentation(self):
        return self.relations.nrows == 0

    def annihilator(self, v):
        """Generators of the ideal ``{r : r*v == 0 in M}``."""
        v = self.vector(v)
        rows = [v] + list(self.relations.rows)
        syz = RowSpan(self.ring, rows, self.ngens).syzygies()
        return [s[0] for s in syz if s[0]]

    def order(self, v):
        """Order of an element of a ZZ-module; 0 when the order is infinite."""
        R = self.ring
        if not R.is_euclidean:
            raise CapabilityError("element orders need a euclidean ring")
        from ..ring_core.snf import gcd_bezout
        g = R.zero
        for a in self.annihilator(v):
            g = gcd_bezout(R, g, a)[0]
        return g

    def invariant_factors(self):
        """``(torsion, free_rank)`` with torsion the non-unit invariant factors."""
        R = self.ring
        R.require("euclidean", "invariant factors")
        if self.relations.nrows == 0:
            return (), self.ngens
        d = smith_normal_form(self.relations).invariant_factors
        torsion = tuple(x for x in d if not R.is_unit(x))
        return torsion, self.ngens - len(d)

    def vector_space_dim(self):
        """Dimension over the coefficient field, or None when it is infinite."""
        R = self.ring
        if R.is_field:
            r = smith_decomposition(self.relations)[5] if self.relations.nrows else 0
            return self.ngens - r
        if R.is_euclidean and R.is_groebner:
            torsion, free = self.invariant_factors()
            return None if free else sum(R.norm(d) for d in torsion)
        if not R.is_groebner:
            raise CapabilityError(f"vector_space_dim needs a field or a polynomial ring over one, got {R}")
        return _standard_monomial_count(self)

    def __repr__(self):
        R = self.ring
        rels = "; ".join("[" + ", ".join(R.render(a) for a in r) + "]" for r in self.relations.rows)
        return f"PresentedModule({R}, gens={self.ngens}, rels=[{rels}])"


def describe_module(M):
    """Short structural name: ``0``, ``ZZ/2 + ZZ``, ``QQ[x]/(x)``, or a pruned presentation."""
    R = M.ring
    if R.is_euclidean:
        torsion, free = M.invariant_factors()
        parts = []
        for t in torsion:
            t = R.render(t)
            parts.append(f"{R}/{t}" if t.isdigit() else f"{R}/({t})")
        if free:
            parts.append(str(R) if free == 1 else f"{R}^{free}")
        return " + ".join(parts) if parts else "0"
    P = prune(M)[0]
    if P.ngens == 0:
        return "0"
    head = str(R) if P.ngens == 1 else f"{R}^{P.ngens}"
    if not P.relations.nrows:
        return head
    if P.ngens == 1:
        return f"{R}/(" + ", ".join(R.render(r[0]) for r in P.relations.rows) + ")"
    rels = ", ".join("[" + ", ".join(R.render(a) for a in r) + "]" for r in P.relations.rows)
    return f"{head}/<{rels}>"


def _standard_monomial_count(M):
    R = M.ring
    if M.relations.nrows == 0:
        return 0 if M.ngens == 0 else None
    gb = M.span._impl.gb
    leads = [max(v, key=gb.key) for v in gb.basis]
    total = 0
    for p in range(M.ngens):
        mine = [e for q, e in leads if q == p]
        bounds = []
        for k in range(R.nvars):
            pure = [e[k] for e in mine if all(x == 0 for i, x in enumerate(e) if i != k)]
            if not pure:
                return None
            bounds.append(min(pure))
        total += _count_staircase(mine, bounds)
    return total


def _count_staircase(leads, bounds):
    from itertools import product
    count = 0
    for e in product(*(range(b) for b in bounds)):
        if not any(all(a <= b for a, b in zip(l, e)) for l in leads):
            count += 1
    return count


class ModuleElement:
    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        self.parent = parent
        self.coeffs = coeffs

    def _other(self, other):
        if isinstance(other, ModuleElement):
            if other.parent is not self.parent:
                raise TypeError("elements of different modules")
            return other.coeffs
        return self.parent.vector(other)

    def __add__(self, other):
        w = self._other(other)
        return ModuleElement(self.parent, tuple(a + b for a, b in zip(self.coeffs, w)))

    def __sub__(self, other):
        w = self._other(other)
        return ModuleElement(self.parent, tuple(a - b for a, b in zip(self.coeffs, w)))

    def __neg__(self):
        return ModuleElement(self.parent, tuple(-a for a in self.coeffs))

    def __rmul__(self, r):
        r = self.parent.ring(r)
        return ModuleElement(self.parent, tuple(r * a for a in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, ModuleElement) and other.parent is not self.parent:
            return False
        return self.parent.equal(self.coeffs, self._other(other))

    __hash__ = None

    def is_zero(self):
        return self.parent.is_zero_vector(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        R = self.parent.ring
        return "(" + ", ".join(R.render(a) for a in self.coeffs) + ")"


class HomError(ValueError):
    """A matrix that does not define a homomorphism between the given modules."""


class ModuleHom:
    """``source -> target`` given by a ``source.ngens x target.ngens`` matrix.

    Construction checks well-definedness: every relation of the source must
    map into the relation span of the target.  ``certificate[k]`` holds the
    coefficients over the target relations for source relation ``k``.
    """

    def __init__(self, source, target, matrix, check=True):
        if source.ring != target.ring:
            raise TypeError(f"ring mismatch: {source.ring} vs {target.ring}")
        R = source.ring
        if not isinstance(matrix, Matrix):
            matrix = Matrix(R, list(matrix), target.ngens)
        if matrix.shape != (source.ngens, target.ngens):
            raise ValueError(f"hom matrix has shape {matrix.shape}, expected "
                             f"{(source.ngens, target.ngens)}")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.certificate = None
        if check:
            cert = []
            for k, rel in enumerate(source.relations.rows):
                img = matrix.apply_row(rel)
                c = target.relation_lift(img) if any(img) else (R.zero,) * target.relations.nrows
                if c is None:
                    raise HomError(f"source relation {k} maps to a nonzero element of the target")
                cert.append(c)
            self.certificate = cert

    @property
    def ring(self):
        return self.source.ring

    def verify(self):
        """Re-check the stored certificate by expansion."""
        if self.certificate is None:
            return False
        L = self.target.relations
        for rel, c in zip(self.source.relations.rows, self.certificate):
            if self.matrix.apply_row(rel) != (L.apply_row(c) if L.nrows else (self.ring.zero,) * L.ncols):
                return False
        return True

    def apply(self, v):
        return self.matrix.apply_row(self.source.vector(v))

    def __call__(self, x):
        if isinstance(x, ModuleElement):
            if x.parent is not self.source:
                raise TypeError("element is not in the source of this hom")
            x = x.coeffs
        return ModuleElement(self.target, self.apply(x))

    def __mul__(self, other):
        """``self * other`` is the composite ``self o other``."""
        if not isinstance(other, ModuleHom):
            return NotImplemented
        return compose(self, other)

    def __add__(self, other):
        self._parallel(other)
        return ModuleHom(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other):
        self._parallel(other)
        return ModuleHom(self.source, self.target, self.matrix - other.matrix)

    def __neg__(self):
        return ModuleHom(self.source, self.target, -self.matrix)

    def scale(self, r):
        return ModuleHom(self.source, self.target, self.matrix.scale(self.ring(r)))

    def _parallel(self, other):
        if other.source is not self.source or other.target is not self.target:
            raise TypeError("homs must share source and target")

    def equals(self, other):
        self._parallel(other)
        D = self.matrix - other.matrix
        return all(self.target.is_zero_vector(r) for r in D.rows)

    def is_zero(self):
        return all(self.target.is_zero_vector(r) for r in self.matrix.rows)

    def lift(self, y):
        """Some ``x`` in the source with ``self(x) == y``, or None."""
        if isinstance(y, ModuleElement):
            y = y.coeffs
        y = self.target.vector(y)
        g = self.source.ngens
        rows = list(self.matrix.rows) + list(self.target.relations.rows)
        c = RowSpan(self.ring, rows, self.target.ngens).lift(y)
        if c is None:
            return None
        return ModuleElement(self.source, tuple(c[:g]))

    def is_surjective(self):
        span = RowSpan(self.ring, list(self.matrix.rows) + list(self.target.relations.rows),
                       self.target.ngens)
        return all(span.contains(e.coeffs) for e in self.target.gens())

    def is_injective(self):
        return kernel(self)[0].is_zero()

    def is_isomorphism(self):
        return self.is_surjective() and self.is_injective()

    def __repr__(self):
        return f"ModuleHom({self.source.ngens} -> {self.target.ngens}, {self.matrix!r})"


def identity(M):
    return ModuleHom(M, M, Matrix.identity(M.ring, M.ngens), check=False)


def zero_hom(M, N):
    return ModuleHom(M, N, Matrix.zeros(M.ring, M.ngens, N.ngens), check=False)


def compose(g, f):
    """``g o f`` for ``f: M -> N`` and ``g: N -> P``."""
    if f.target is not g.source:
        raise TypeError("homs are not composable")
    return ModuleHom(f.source, g.target, f.matrix * g.matrix, check=False)


def _preimage_rows(A, L):
    """Generators of ``{x : x*A in rowspan(L)}``."""
    g = A.nrows
    rows = list(A.rows) + list(L.rows)
    syz = RowSpan(A.ring, rows, A.ncols).syzygies()
    return [s[:g] for s in syz]


def kernel(f):
    """``(K, inclusion)`` with ``inclusion: K -> source`` onto the kernel of ``f``."""
    M = f.source
    R = M.ring
    if M.ngens == 0:
        K = PresentedModule.zero(R)
        return K, zero_hom(K, M)
    if f.matrix.is_zero():
        return M, identity(M)
    X = []
    for x in _preimage_rows(f.matrix, f.target.relations):
        if any(x) and not M.is_zero_vector(x) and x not in X:
            X.append(x)
    if not X:
        K = PresentedModule.zero(R)
        return K, zero_hom(K, M)
    Xm = Matrix._raw(R, X, M.ngens)
    rels = _preimage_rows(Xm, M.relations)
    K = PresentedModule(R, len(X), Matrix._raw(R, rels, len(X)))
    return K, ModuleHom(K, M, Xm, check=False)


def cokernel(f):
    """``(C, projection)`` with ``C = target / image(f)``."""
    N = f.target
    C = PresentedModule(N.ring, N.ngens, vstack(N.relations, f.matrix))
    return C, ModuleHom(N, C, Matrix.identity(N.ring, N.ngens), check=False)


def image(f):
    """``(I, inclusion, corestriction)`` with ``I`` presented on the images of the source generators."""
    M, N = f.source, f.target
    R = M.ring
    rels = _preimage_rows(f.matrix, N.relations)
    I = PresentedModule(R, M.ngens, Matrix._raw(R, rels, M.ngens))
    inc = ModuleHom(I, N, f.matrix, check=False)
    core = ModuleHom(M, I, Matrix.identity(R, M.ngens), check=False)
    return I, inc, core


def prune(M):
    """Drop generators that a relation with a unit coefficient expresses through the others.

    Returns ``(M2, to, back)`` with ``to: M -> M2`` and ``back: M2 -> M``
    mutually inverse isomorphisms.
    """
    R = M.ring
    g = M.ngens
    rels = [list(r) for r in M.relations.rows]
    # P: images of the original generators in the current generators
    P = [[R.one if i == j else R.zero for j in range(g)] for i in range(g)]
    keep = list(range(g))
    while True:
        hit = None
        for i, r in enumerate(rels):
            for j, a in enumerate(r):
                if a and R.is_unit(a):
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j = hit
        r = rels.pop(i)
        u = R.inv(r[j])
        # gen_j = -u^{-1} * sum_{k != j} r_k gen_k
        sub = [-u * a if k != j else R.zero for k, a in enumerate(r)]

        def substitute(v):
            c = v[j]
            w = [x + c * s for x, s in zip(v, sub)]
            del w[j]
            return w

        rels = [w for w in (substitute(v) for v in rels) if any(w)]
        P = [substitute(v) for v in P]
        del keep[j]
    n = len(keep)
    M2 = PresentedModule(R, n, Matrix._raw(R, [tuple(r) for r in rels], n))
    to = ModuleHom(M, M2, Matrix._raw(R, [tuple(r) for r in P], n), check=False)
    back_rows = []
    for k in keep:
        back_rows.append(tuple(R.one if c == k else R.zero for c in range(g)))
    back = ModuleHom(M2, M, Matrix._raw(R, back_rows, g), check=False)
    return M2, to, back
