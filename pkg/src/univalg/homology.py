"""Bounded complexes of presented modules, their homology and the long exact sequence.

Indexing is descending: ``d_i : M_i -> M_{i-1}``, and the connecting map of
a short exact sequence goes ``h_i(C) -> h_{i-1}(A)``.  Modules outside the
stored range are zero.
"""

from .fp_modules.modules import (ModuleElement, ModuleHom, PresentedModule, cokernel, identity,
                                 kernel, zero_hom)
from .ring_core.matrix import Matrix


class ComplexError(ValueError):
    pass


class Complex:
    """``M_hi -> ... -> M_lo`` with ``d_i: M_i -> M_{i-1}``.

    ``modules`` is a list for degrees ``lo, lo+1, ...``; ``differentials``
    maps a degree ``i`` to a ``ModuleHom`` or to a matrix (which is then
    checked for well-definedness).  Missing differentials are zero.
    """

    def __init__(self, modules, differentials=None, lo=0, check=True):
        modules = list(modules)
        if not modules:
            raise ComplexError("a complex needs at least one module")
        self.ring = modules[0].ring
        self.lo = lo
        self.hi = lo + len(modules) - 1
        self._modules = {lo + k: M for k, M in enumerate(modules)}
        self._zeros = {}
        self._d = {}
        self._homology = {}
        for i, d in (differentials or {}).items():
            i = int(i)
            src, tgt = self.module(i), self.module(i - 1)
            if isinstance(d, ModuleHom):
                if d.source is not src or d.target is not tgt:
                    raise ComplexError(f"differential {i} does not go from M_{i} to M_{i - 1}")
            else:
                d = ModuleHom(src, tgt, d if isinstance(d, Matrix) else
                              Matrix(self.ring, list(d), tgt.ngens))
            self._d[i] = d
        if check:
            for i in range(self.lo + 1, self.hi + 1):
                if not (self.d(i - 1) * self.d(i)).is_zero():
                    raise ComplexError(f"d_{i - 1} o d_{i} is not zero")

    def module(self, i):
        if i in self._modules:
            return self._modules[i]
        if i not in self._zeros:
            self._zeros[i] = PresentedModule.zero(self.ring)
        return self._zeros[i]

    def d(self, i):
        if i in self._d:
            return self._d[i]
        return zero_hom(self.module(i), self.module(i - 1))

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def cohomology(self, i):
        if i not in self._homology:
            self._homology[i] = Homology(self, i)
        return self._homology[i]

    def __repr__(self):
        return f"Complex(degrees {self.lo}..{self.hi}, gens {[self.module(i).ngens for i in self.degrees()]})"


class Homology:
    """``h_i = ker d_i / im d_{i+1}`` presented on the generators of ``ker d_i``.

    ``classify`` sends a cycle of ``M_i`` to its class; ``representative``
    goes back from a class to a cycle.
    """

    def __init__(self, C, i):
        self.complex = C
        self.degree = i
        M = C.module(i)
        K, inc = kernel(C.d(i))
        self.cycles = K
        self.inclusion = inc
        d_next = C.d(i + 1)
        rows = []
        for v in d_next.matrix.rows:
            x = inc.lift(v)
            if x is None:
                raise ComplexError(f"a boundary in degree {i} is not a cycle")
            rows.append(x.coeffs)
        beta = ModuleHom(C.module(i + 1), K, Matrix._raw(C.ring, rows, K.ngens), check=False)
        self.module, self.projection = cokernel(beta)
        self.ambient = M

    def classify(self, x):
        """Class of the cycle ``x``; raises ``ComplexError`` if ``x`` is not a cycle."""
        if isinstance(x, ModuleElement):
            x = x.coeffs
        y = self.inclusion.lift(x)
        if y is None:
            raise ComplexError(f"{x} is not a cycle in degree {self.degree}")
        return ModuleElement(self.module, y.coeffs)

    def representative(self, h):
        if isinstance(h, ModuleElement):
            h = h.coeffs
        return self.inclusion.apply(h)

    def is_zero(self):
        return self.module.is_zero()


def cohomology_at(C, i):
    return C.cohomology(i)


class ComplexHom:
    """Degreewise homs ``phi_i: A_i -> B_i`` commuting with the differentials."""

    def __init__(self, source, target, maps, check=True):
        self.source = source
        self.target = target
        self._maps = {}
        for i, f in maps.items():
            i = int(i)
            if not isinstance(f, ModuleHom):
                f = ModuleHom(source.module(i), target.module(i),
                              f if isinstance(f, Matrix) else Matrix(source.ring, list(f), target.module(i).ngens))
            if f.source is not source.module(i) or f.target is not target.module(i):
                raise ComplexError(f"map in degree {i} has the wrong source or target")
            self._maps[i] = f
        if check:
            for i in self.degrees():
                lhs = self[i - 1] * source.d(i)
                rhs = target.d(i) * self[i]
                if not lhs.equals(rhs):
                    raise ComplexError(f"square in degree {i} does not commute")

    def degrees(self):
        return range(min(self.source.lo, self.target.lo), max(self.source.hi, self.target.hi) + 1)

    def __getitem__(self, i):
        if i in self._maps:
            return self._maps[i]
        return zero_hom(self.source.module(i), self.target.module(i))

    def __mul__(self, other):
        if not isinstance(other, ComplexHom):
            return NotImplemented
        maps = {i: self[i] * other[i] for i in set(self.degrees()) | set(other.degrees())}
        return ComplexHom(other.source, self.target, maps, check=False)


def identity_complex_hom(C):
    return ComplexHom(C, C, {i: identity(C.module(i)) for i in C.degrees()}, check=False)


def induced_map(phi, i):
    """``h_i(phi): h_i(A) -> h_i(B)``, class of ``m`` to class of ``phi_i(m)``."""
    HA = phi.source.cohomology(i)
    HB = phi.target.cohomology(i)
    rows = []
    for g in HA.module.gens():
        rows.append(HB.classify(phi[i].apply(HA.representative(g))).coeffs)
    return ModuleHom(HA.module, HB.module, Matrix._raw(phi.source.ring, rows, HB.module.ngens))


class Homotopy:
    """Maps ``k_i: M_i -> N_{i+1}`` with ``phi_i - psi_i == k_{i-1} o f_i + g_{i+1} o k_i``.

    ``f`` and ``g`` are the differentials of the source and target.
    Construction fails unless the identity holds in every degree.
    """

    def __init__(self, phi, psi, maps):
        M, N = phi.source, phi.target
        if psi.source is not M or psi.target is not N:
            raise ComplexError("a homotopy relates two maps between the same complexes")
        self.phi, self.psi = phi, psi
        self._maps = {}
        for i, k in maps.items():
            i = int(i)
            if not isinstance(k, ModuleHom):
                k = ModuleHom(M.module(i), N.module(i + 1),
                              k if isinstance(k, Matrix) else Matrix(M.ring, list(k), N.module(i + 1).ngens))
            self._maps[i] = k
        for i in phi.degrees():
            if not self.holds_at(i):
                raise ComplexError(f"homotopy identity fails in degree {i}")

    def __getitem__(self, i):
        if i in self._maps:
            return self._maps[i]
        return zero_hom(self.phi.source.module(i), self.phi.target.module(i + 1))

    def holds_at(self, i):
        M, N = self.phi.source, self.phi.target
        lhs = self.phi[i] - self.psi[i]
        rhs = self[i - 1] * M.d(i) + N.d(i + 1) * self[i]
        return lhs.equals(rhs)


class SesOfComplexes:
    """``0 -> A -> B -> C -> 0`` with ``phi: A -> B`` and ``psi: B -> C``, exact in every degree."""

    def __init__(self, phi, psi, check=True):
        if phi.target is not psi.source:
            raise ComplexError("phi and psi are not composable")
        self.A, self.B, self.C = phi.source, phi.target, psi.target
        self.phi, self.psi = phi, psi
        if check:
            for i in self.degrees():
                problem = self.exactness_problem(i)
                if problem:
                    raise ComplexError(f"not short exact in degree {i}: {problem}")

    def degrees(self):
        los = [X.lo for X in (self.A, self.B, self.C)]
        his = [X.hi for X in (self.A, self.B, self.C)]
        return range(min(los), max(his) + 1)

    def exactness_problem(self, i):
        f, g = self.phi[i], self.psi[i]
        if not f.is_injective():
            return "phi is not injective"
        if not g.is_surjective():
            return "psi is not surjective"
        if not (g * f).is_zero():
            return "psi o phi is not zero"
        K, inc = kernel(g)
        for v in inc.matrix.rows:
            if f.lift(v) is None:
                return "ker psi is larger than im phi"
        return None


def _chase(S, i, c, sign, b_shift=None):
    b = S.psi[i].lift(c)
    if b is None:
        raise ComplexError(f"cannot lift {c} through psi_{i}; psi is not surjective")
    b = b.coeffs
    if b_shift is not None:
        b = tuple(x + y for x, y in zip(b, S.phi[i].apply(b_shift)))
    db = S.B.d(i).apply(b)
    a = S.phi[i - 1].lift(db)
    if a is None:
        raise ComplexError("pull-back through phi failed; the sequence is not exact")
    HA = S.A.cohomology(i - 1)
    cls = HA.classify(a.coeffs)
    R = S.A.ring
    return tuple(R(sign) * x for x in cls.coeffs)


def connecting_image(S, i, c, sign=1, b_shift=None):
    """``delta_i`` of the cycle ``c`` in ``C_i``, as a class in ``h_{i-1}(A)``.

    ``b_shift`` (an element of ``A_i``) changes the chosen lift of ``c`` by
    ``phi_i(b_shift)``; the class must not depend on it.
    """
    if isinstance(c, ModuleElement):
        c = c.coeffs
    HA = S.A.cohomology(i - 1)
    return ModuleElement(HA.module, _chase(S, i, c, sign, b_shift))


def connecting_map(S, i, sign=1, check_independence=True):
    """``delta_i: h_i(C) -> h_{i-1}(A)``: lift through psi, apply d, pull back through phi, times ``sign``.

    The result is a verified hom, so it kills the relations of ``h_i(C)``
    (independence of the representative).  With ``check_independence`` the
    value on every generator is recomputed with the lift moved by each
    generator of ``A_i``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    HC = S.C.cohomology(i)
    HA = S.A.cohomology(i - 1)
    rows = []
    for g in HC.module.gens():
        c = HC.representative(g)
        val = _chase(S, i, c, sign)
        if check_independence:
            for a in S.A.module(i).gens():
                alt = _chase(S, i, c, sign, a.coeffs)
                if not HA.module.equal(alt, val):
                    raise ComplexError("connecting map depends on the chosen lift")
        rows.append(val)
    return ModuleHom(HC.module, HA.module, Matrix._raw(S.A.ring, rows, HA.module.ngens))


def exactness_report(C):
    """``{k: exact at M_k}`` for every degree of ``C`` (ends included)."""
    report = {}
    for k in range(C.lo, C.hi + 1):
        K, inc = kernel(C.d(k))
        d_in = C.d(k + 1)
        report[k] = all(d_in.lift(v) is not None for v in inc.matrix.rows)
    return report


def long_exact_sequence(S, sign=1):
    """The long exact homology sequence as a Complex, with its exactness report.

    Node ``3i+2`` is ``h_i(A)``, ``3i+1`` is ``h_i(B)``, ``3i`` is ``h_i(C)``;
    the differential out of ``3i`` is ``delta_i``.
    """
    lo, hi = S.degrees().start, S.degrees().stop - 1
    modules = []
    for i in range(lo, hi + 1):
        modules += [S.C.cohomology(i).module, S.B.cohomology(i).module, S.A.cohomology(i).module]
    d = {}
    for i in range(lo, hi + 1):
        d[3 * i + 2] = induced_map(S.phi, i)
        d[3 * i + 1] = induced_map(S.psi, i)
        if i > lo:
            d[3 * i] = connecting_map(S, i, sign)
    L = Complex(modules, d, lo=3 * lo)
    return L, exactness_report(L)


def complex_to_json(C):
    R = C.ring
    return {
        "ring": repr(R),
        "lo": C.lo,
        "modules": [{"gens": C.module(i).ngens,
                     "rels": [[R.render(a) for a in r] for r in C.module(i).relations.rows]}
                    for i in C.degrees()],
        "differentials": {str(i): [[R.render(a) for a in r] for r in C.d(i).matrix.rows]
                          for i in range(C.lo + 1, C.hi + 1)},
    }


def complex_from_json(data, ring=None):
    from .ringspec import parse_element, parse_ring
    R = ring or parse_ring(data["ring"])
    conv = lambda rows: [[parse_element(R, str(a)) for a in r] for r in rows]
    modules = [PresentedModule(R, m["gens"], conv(m.get("rels", []))) for m in data["modules"]]
    lo = int(data.get("lo", 0))
    diffs = {}
    for i, rows in data.get("differentials", {}).items():
        i = int(i)
        tgt = modules[i - 1 - lo] if lo <= i - 1 <= lo + len(modules) - 1 else PresentedModule.zero(R)
        diffs[i] = Matrix(R, conv(rows), tgt.ngens)
    return Complex(modules, diffs, lo=lo)
