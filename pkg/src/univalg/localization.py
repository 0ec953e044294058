"""Rings of fractions R[S^-1] of an integral domain R at a finitely generated monoid S.

A fraction stores its numerator and, for the denominator, an exponent
vector over the generators of S.  Since R is a domain and 0 is not in S,
``r/s == r'/s'`` exactly when ``r*s' == r'*s``.
"""

from collections import namedtuple

from .ring_core.rings import Ring


def _exact_quotient(R, a, b):
    if R.is_euclidean:
        return R.exact_div(a, b)
    if R.is_groebner:
        from .poly_gb.groebner import reduce
        r, (q,) = reduce(a, [b])
        return q if not r else None
    return None


class MultiplicativeSet:
    """The monoid of products of ``generators``; membership carries an exponent witness."""

    def __init__(self, ring, generators):
        gens = tuple(ring(s) for s in generators)
        for s in gens:
            if not s:
                raise ValueError("0 cannot be in the multiplicative set of a domain")
        self.ring = ring
        self.generators = gens

    def product(self, exps):
        out = self.ring.one
        for s, e in zip(self.generators, exps):
            for _ in range(e):
                out = out * s
        return out

    def witness(self, d):
        """``(exps, unit)`` with ``d == unit * product(exps)``, or None if ``d`` is not in S up to a unit."""
        R = self.ring
        d = R(d)
        if not d:
            return None
        exps = [0] * len(self.generators)
        changed = True
        while changed and not R.is_unit(d):
            changed = False
            for k, s in enumerate(self.generators):
                if R.is_unit(s):
                    continue
                q = _exact_quotient(R, d, s)
                if q is not None:
                    d = q
                    exps[k] += 1
                    changed = True
                    break
        if not R.is_unit(d):
            return None
        return tuple(exps), d

    def __repr__(self):
        return "{" + ", ".join(self.ring.render(s) for s in self.generators) + "}"


class LocalizedRing(Ring):
    """``R[S^-1]`` for a domain R; elements are ``LocalFraction``."""

    def __init__(self, ring, generators):
        self.base = ring
        self.S = generators if isinstance(generators, MultiplicativeSet) else MultiplicativeSet(ring, generators)
        self.capabilities = frozenset()
        self.tag = f"{ring}[{self.S}^-1]"
        self.zero = LocalFraction(self, ring.zero, self._no_exps())
        self.one = LocalFraction(self, ring.one, self._no_exps())

    def _no_exps(self):
        return (0,) * len(self.S.generators)

    def __eq__(self, other):
        return (isinstance(other, LocalizedRing) and self.base == other.base
                and self.S.generators == other.S.generators)

    def __hash__(self):
        return hash((self.base, self.S.generators))

    def fraction(self, r, exps=None):
        exps = self._no_exps() if exps is None else tuple(exps)
        if len(exps) != len(self.S.generators) or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent witness {exps}")
        return LocalFraction(self, self.base(r), exps)._reduced()

    def q(self, r):
        """The localization map ``r -> r/1``."""
        return LocalFraction(self, self.base(r), self._no_exps())

    localization_map = q

    def inverse_of_generator(self, k):
        e = [0] * len(self.S.generators)
        e[k] = 1
        return LocalFraction(self, self.base.one, tuple(e))

    def divide(self, r, d):
        """``r/d`` for a denominator ``d`` that lies in S up to a unit."""
        w = self.S.witness(d)
        if w is None:
            raise ValueError(f"{self.base.render(self.base(d))} is not in the multiplicative set {self.S}")
        exps, unit = w
        return self.fraction(self.base(r) * self.base.inv(unit), exps)

    def convert(self, x):
        if isinstance(x, LocalFraction):
            if x.ring != self:
                raise TypeError(f"fraction from {x.ring} used in {self}")
            return x
        return self.q(x)

    def is_unit(self, a):
        return self.S.witness(a.num) is not None

    def inv(self, a):
        w = self.S.witness(a.num)
        if w is None:
            raise ZeroDivisionError(f"{a} is not a unit of {self}")
        exps, unit = w
        num = self.S.product(a.exps) * self.base.inv(unit)
        return self.fraction(num, exps)

    def from_tree(self, tree):
        from .syntax import evaluate

        def leaf(n):
            if n[0] == "num":
                return self.q(n[1])
            if not hasattr(self.base, "vars"):
                raise ValueError(f"{self.base} has no variable {n[1]!r}")
            return self.q(self.base.parse(n[1]))

        return evaluate(tree, leaf, lambda a, b: a * self.inv(b))

    def parse(self, text):
        from .syntax import TokenStream, parse_expr

        ts = TokenStream.of(text)
        tree = parse_expr(ts)
        if not ts.at_end():
            ts.fail("unexpected token after fraction")
        return self.from_tree(tree)

    def render(self, a):
        return str(a)


class LocalFraction:
    __slots__ = ("ring", "num", "exps")

    def __init__(self, ring, num, exps):
        self.ring = ring
        self.num = num
        self.exps = exps

    @property
    def den(self):
        return self.ring.S.product(self.exps)

    def _reduced(self):
        """Cancel generator factors from the numerator where division is cheap (ZZ, K[x])."""
        L = self.ring
        R = L.base
        if not R.is_euclidean or not self.num:
            if not self.num:
                return LocalFraction(L, R.zero, L._no_exps())
            return self
        num, exps = self.num, list(self.exps)
        for k, s in enumerate(L.S.generators):
            while exps[k]:
                q = R.exact_div(num, s)
                if q is None:
                    break
                num = q
                exps[k] -= 1
        return LocalFraction(L, num, tuple(exps))

    def _coerce(self, other):
        if isinstance(other, LocalFraction):
            if other.ring != self.ring:
                raise TypeError("fractions from different localizations")
            return other
        try:
            return self.ring.q(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        S = self.ring.S
        # r/s + r'/s' = (r*s'' + r'*s''') / lcm-style common witness
        common = tuple(max(a, b) for a, b in zip(self.exps, o.exps))
        a = self.num * S.product(tuple(c - e for c, e in zip(common, self.exps)))
        b = o.num * S.product(tuple(c - e for c, e in zip(common, o.exps)))
        return LocalFraction(self.ring, a + b, common)._reduced()

    __radd__ = __add__

    def __neg__(self):
        return LocalFraction(self.ring, -self.num, self.exps)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        exps = tuple(a + b for a, b in zip(self.exps, o.exps))
        return LocalFraction(self.ring, self.num * o.num, exps)._reduced()

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * self.ring.inv(o)

    def __pow__(self, n):
        out = self.ring.one
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return frac_equal(self, o)

    __hash__ = None

    def __bool__(self):
        return bool(self.num)

    def __str__(self):
        R = self.ring.base
        num = R.render(self.num)
        if not any(self.exps):
            return num
        parts = []
        for s, e in zip(self.ring.S.generators, self.exps):
            if e:
                t = R.render(s)
                if len(str(t)) > 1 and not str(t).isalnum():
                    t = f"({t})"
                parts.append(t if e == 1 else f"{t}^{e}")
        den = "*".join(parts)
        if len(parts) > 1:
            den = f"({den})"
        if not num.lstrip("-").isalnum():
            num = f"({num})"
        return f"{num}/{den}"

    __repr__ = __str__


def frac_equal(a, b):
    """``r/s == r'/s'`` iff ``r*s' == r'*s`` (the witness t is 1 in a domain)."""
    if a.ring != b.ring:
        raise TypeError("fractions from different localizations")
    S = a.ring.S
    return a.num * S.product(b.exps) == b.num * S.product(a.exps)


class StricklandReport(namedtuple("StricklandReport", "units decomposition kernel violations")):
    @property
    def passed(self):
        return self.units and self.decomposition and self.kernel


def strickland_verify(L, sample=(), kernel_claims=(), q=None):
    """Check the three clauses characterising ``q: R -> R[S^-1]`` on a sample.

    1. ``q(s)`` is a unit for every generator ``s`` of S,
    2. every sample fraction equals ``q(r) * q(s)^-1``,
    3. ring elements sent to 0 by ``q`` are 0 (Ann(S) = 0 in a domain).

    ``kernel_claims`` are ring elements asserted to lie in the kernel; each is
    checked against clause 3.  ``q`` may be replaced to test other maps.
    """
    q = q or L.q
    R = L.base
    violations = []
    units = True
    for k, s in enumerate(L.S.generators):
        if q(s) * L.inverse_of_generator(k) != L.one:
            units = False
            violations.append(("unit", R.render(s)))
    decomposition = True
    kernel = True
    for x in sample:
        if isinstance(x, LocalFraction):
            inv = L.one
            for k, e in enumerate(x.exps):
                for _ in range(e):
                    inv = inv * L.inverse_of_generator(k)
            if q(x.num) * inv != x:
                decomposition = False
                violations.append(("decomposition", str(x)))
        else:
            r = R(x)
            if not q(r) and r:
                kernel = False
                violations.append(("kernel", R.render(r)))
    for x in kernel_claims:
        r = R(x)
        if r:
            kernel = False
            violations.append(("kernel", R.render(r)))
    return StricklandReport(units, decomposition, kernel, violations)


FactorReport = namedtuple("FactorReport", "images well_defined commutes")


def universal_factor(L, f, inverses, fractions=(), elements=()):
    """Evaluate the factorization ``g(r/s) = f(r) * f(s)^-1`` of ``f`` through ``q``.

    ``inverses[k]`` must satisfy ``f(s_k) * inverses[k] == 1``.  Returns the
    images of ``fractions``, whether equal sample fractions have equal
    images, and whether ``g(q(r)) == f(r)`` on ``elements``.
    """
    gens = L.S.generators
    if len(inverses) != len(gens):
        raise ValueError("one inverse witness per generator of S is required")
    for s, w in zip(gens, inverses):
        if f(s) * w != f(L.base.one):
            raise ValueError(f"f({L.base.render(s)}) times its witness is not 1")

    def g(x):
        out = f(x.num)
        for w, e in zip(inverses, x.exps):
            for _ in range(e):
                out = out * w
        return out

    fractions = list(fractions)
    images = [g(x) for x in fractions]
    well_defined = all(images[i] == images[j]
                       for i in range(len(fractions)) for j in range(i + 1, len(fractions))
                       if frac_equal(fractions[i], fractions[j]))
    commutes = all(g(L.q(r)) == f(L.base(r)) for r in elements)
    return FactorReport(images, well_defined, commutes)
