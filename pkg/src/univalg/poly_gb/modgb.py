"""Gröbner bases of submodules of K[x_1..x_n]^r in position-over-term order.

Vectors are dicts ``{(position, exponents): coefficient}``.  Positions are
compared by index with position 0 the largest, so the leading term of a
vector sits in its first nonzero component.  An ideal is the rank-1 case.

Every basis element may carry its expression in the input generators
(``track=True``), which is what membership certificates and transformation
matrices are read from.
"""

from ..ring_core.snf import LinearSolution

DEFAULT_PAIR_BUDGET = 200_000
_config = {"pair_budget": DEFAULT_PAIR_BUDGET}


def set_pair_budget(n):
    """Change the process-wide S-pair budget; ``None`` restores the default."""
    _config["pair_budget"] = DEFAULT_PAIR_BUDGET if n is None else int(n)


def pair_budget():
    return _config["pair_budget"]


class BudgetExceeded(RuntimeError):
    """Buchberger processed more S-pairs than its configured budget allows."""


def term_key(order_key):
    return lambda t: (-t[0], order_key(t[1]))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _axpy(target, coef, shift, vec):
    """``target -= coef * x^shift * vec`` in place."""
    for (p, e), c in vec.items():
        t = (p, tuple(x + y for x, y in zip(e, shift)))
        v = target.get(t)
        v = -coef * c if v is None else v - coef * c
        if v:
            target[t] = v
        else:
            target.pop(t, None)


def _poly_axpy(target, coef, shift, poly):
    for e, c in poly.items():
        t = tuple(x + y for x, y in zip(e, shift))
        v = target.get(t)
        v = -coef * c if v is None else v - coef * c
        if v:
            target[t] = v
        else:
            target.pop(t, None)


def _scale(vec, c):
    return {t: v * c for t, v in vec.items()}


class _Elem:
    __slots__ = ("vec", "lead", "rep")

    def __init__(self, vec, key, rep):
        self.vec = vec
        self.lead = max(vec, key=key)
        self.rep = rep


class ModuleGB:
    """Reduced Gröbner basis of the submodule spanned by ``vectors``.

    ``basis`` holds the reduced, monic basis vectors in descending order of
    leading term; with ``track`` each has ``reps[i]``, a list of polynomial
    dicts expressing it in the inputs.
    """

    def __init__(self, field, nvars, order_key, vectors, track=False, budget=None):
        self.field = field
        self.nvars = nvars
        self.key = term_key(order_key)
        self.track = track
        self.ninputs = len(vectors)
        self.budget = _config["pair_budget"] if budget is None else budget
        self.pairs_processed = 0
        elems = self._buchberger(vectors)
        elems = self._interreduce(elems)
        elems.sort(key=lambda g: self.key(g.lead), reverse=True)
        self.elems = elems
        self.basis = [g.vec for g in elems]
        self.reps = [g.rep for g in elems] if track else None

    def _unit_rep(self, i):
        if not self.track:
            return None
        rep = [dict() for _ in range(self.ninputs)]
        rep[i] = {(0,) * self.nvars: self.field.one}
        return rep

    def _make(self, vec, rep):
        g = _Elem(vec, self.key, rep)
        lc = vec[g.lead]
        if lc != self.field.one:
            inv = self.field.inv(lc)
            g.vec = _scale(vec, inv)
            if rep is not None:
                g.rep = [_scale(p, inv) for p in rep]
        return g

    def reduce(self, vec, elems=None, rep=None, quotients=False):
        """Fully reduce ``vec``; returns ``(remainder, rep, quotients)``."""
        elems = self.elems if elems is None else elems
        key = self.key
        p = dict(vec)
        r = {}
        quo = [dict() for _ in elems] if quotients else None
        while p:
            t = max(p, key=key)
            c = p[t]
            for j, g in enumerate(elems):
                if g.lead[0] == t[0] and _divides(g.lead[1], t[1]):
                    shift = _sub(t[1], g.lead[1])
                    # g is monic
                    _axpy(p, c, shift, g.vec)
                    if rep is not None:
                        for k, gp in enumerate(g.rep):
                            if gp:
                                _poly_axpy(rep[k], c, shift, gp)
                    if quo is not None:
                        q = quo[j]
                        q[shift] = q.get(shift, self.field.zero) + c
                    break
            else:
                r[t] = c
                del p[t]
        return r, rep, quo

    def _buchberger(self, vectors):
        G = []
        pending = set()
        for i, v in enumerate(vectors):
            if v:
                g = self._make(dict(v), self._unit_rep(i))
                self._add(G, pending, g)
        while pending:
            i, j = min(pending, key=lambda ij: (self._pair_key(G, ij), ij))
            pending.discard((i, j))
            gi, gj = G[i], G[j]
            L = _lcm(gi.lead[1], gj.lead[1])
            if self._product_criterion(gi, gj):
                continue
            if self._chain_criterion(G, pending, i, j, L):
                continue
            self.pairs_processed += 1
            if self.pairs_processed > self.budget:
                raise BudgetExceeded(f"Buchberger exceeded its budget of {self.budget} S-pairs")
            s = {}
            _axpy(s, -self.field.one, _sub(L, gi.lead[1]), gi.vec)
            _axpy(s, self.field.one, _sub(L, gj.lead[1]), gj.vec)
            rep = None
            if self.track:
                rep = [dict() for _ in range(self.ninputs)]
                for k in range(self.ninputs):
                    _poly_axpy(rep[k], -self.field.one, _sub(L, gi.lead[1]), gi.rep[k])
                    _poly_axpy(rep[k], self.field.one, _sub(L, gj.lead[1]), gj.rep[k])
            r, rep, _ = self.reduce(s, G, rep)
            if r:
                self._add(G, pending, self._make(r, rep))
        return G

    def _add(self, G, pending, g):
        n = len(G)
        for i, h in enumerate(G):
            if h.lead[0] == g.lead[0]:
                pending.add((i, n))
        G.append(g)

    def _pair_key(self, G, ij):
        gi, gj = G[ij[0]], G[ij[1]]
        L = _lcm(gi.lead[1], gj.lead[1])
        return (sum(L), self.key((gi.lead[0], L)))

    def _product_criterion(self, gi, gj):
        # coprime leading monomials only settle the pair for ideals (rank 1)
        if not self.rank1:
            return False
        return all(min(a, b) == 0 for a, b in zip(gi.lead[1], gj.lead[1]))

    rank1 = False

    def _chain_criterion(self, G, pending, i, j, L):
        pos = G[i].lead[0]
        for k, gk in enumerate(G):
            if k in (i, j) or gk.lead[0] != pos:
                continue
            if not _divides(gk.lead[1], L):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False

    def _interreduce(self, G):
        key = self.key
        G = sorted(G, key=lambda g: key(g.lead))
        minimal = []
        for g in G:
            if not any(h.lead[0] == g.lead[0] and _divides(h.lead[1], g.lead[1]) for h in minimal):
                minimal.append(g)
        out = []
        for idx, g in enumerate(minimal):
            others = minimal[:idx] + minimal[idx + 1:]
            rep = [dict(p) for p in g.rep] if self.track else None
            # leading term is irreducible, so only the tail changes
            r, rep, _ = self.reduce(g.vec, others, rep)
            out.append(self._make(r, rep))
        return out

    def normal_form(self, vec):
        return self.reduce(vec)[0]

    def lift(self, vec):
        """Coefficients ``c`` (polynomial dicts) with ``sum c_i * input_i == vec``, or None."""
        if not self.track:
            raise ValueError("lift needs a tracked Gröbner basis")
        r, _, quo = self.reduce(vec, quotients=True)
        if r:
            return None
        coeffs = [dict() for _ in range(self.ninputs)]
        for q, g in zip(quo, self.elems):
            for shift, c in q.items():
                for k, gp in enumerate(g.rep):
                    if gp:
                        _poly_axpy(coeffs[k], -c, shift, gp)
        return coeffs


class IdealGB(ModuleGB):
    rank1 = True


# ---- bridges between Polynomial vectors and engine dicts ----

def vector_to_dict(vec):
    out = {}
    for p, f in enumerate(vec):
        for e, c in f.terms.items():
            out[(p, e)] = c
    return out


def dict_to_vector(ring, d, rank):
    comps = [dict() for _ in range(rank)]
    for (p, e), c in d.items():
        comps[p][e] = c
    from .polynomial import Polynomial
    return tuple(Polynomial(ring, c) for c in comps)


def poly_from_dict(ring, d):
    from .polynomial import Polynomial
    return Polynomial(ring, {e: c for e, c in d.items() if c})


class GroebnerSpan:
    """Row span of a list of vectors in R^rank, R a polynomial ring over a field.

    Answers membership with certificates (``lift``) and computes the
    syzygies of the spanning rows.
    """

    def __init__(self, ring, rows, rank, budget=None):
        ring.require("groebner", "Gröbner span")
        self.ring = ring
        self.rows = [tuple(ring(x) for x in r) for r in rows]
        self.rank = rank
        self.budget = budget
        self._gb = None

    @property
    def gb(self):
        if self._gb is None:
            R = self.ring
            cls = IdealGB if self.rank == 1 else ModuleGB
            self._gb = cls(R.base, R.nvars, R.key, [vector_to_dict(r) for r in self.rows],
                           track=True, budget=self.budget)
        return self._gb

    def contains(self, vec):
        return not self.gb.normal_form(vector_to_dict(vec))

    def lift(self, vec):
        c = self.gb.lift(vector_to_dict(vec))
        if c is None:
            return None
        return tuple(poly_from_dict(self.ring, p) for p in c)

    def syzygies(self):
        """Generators of ``{c : sum c_i * rows_i == 0}``."""
        R, n, k = self.ring, self.rank, len(self.rows)
        ext = []
        for i, r in enumerate(self.rows):
            d = vector_to_dict(r)
            d[(n + i, (0,) * R.nvars)] = R.base.one
            ext.append(d)
        gb = ModuleGB(R.base, R.nvars, R.key, ext, budget=self.budget)
        syz = []
        for v in gb.basis:
            if min(p for p, _ in v) >= n:
                comps = [dict() for _ in range(k)]
                for (p, e), c in v.items():
                    comps[p - n][e] = c
                syz.append(tuple(poly_from_dict(R, c) for c in comps))
        return syz


def solve_columns(A, b):
    """``A*x == b`` over a polynomial ring via the column span of ``A``."""
    R = A.ring
    span = GroebnerSpan(R, [A.col(j) for j in range(A.ncols)], A.nrows)
    x = span.lift(b)
    if x is None:
        return None
    return LinearSolution(x, span.syzygies())
