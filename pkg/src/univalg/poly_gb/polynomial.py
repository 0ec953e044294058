"""Multivariate polynomials over ZZ, QQ or GF(p) with a fixed monomial order."""

from fractions import Fraction

from ..ring_core.rings import EUCLIDEAN, FIELD, GROEBNER, GFElement, Ring


def lex_key(e):
    return e


def degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


ORDERS = {"lex": lex_key, "degrevlex": degrevlex_key}


class PolynomialRing(Ring):
    """``base[vars]`` with a monomial order (``degrevlex`` by default)."""

    def __init__(self, base, variables, order="degrevlex"):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",") if v.strip()]
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable in {variables}")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        if isinstance(base, PolynomialRing):
            raise TypeError("nest polynomial rings by listing all variables in one ring")
        self.base = base
        self.vars = variables
        self.nvars = len(variables)
        self.order = order
        self.key = ORDERS[order]
        caps = set()
        if base.is_field:
            caps.add(GROEBNER)
            if self.nvars == 1:
                caps.add(EUCLIDEAN)
        self.capabilities = frozenset(caps)
        self.tag = f"{base.tag}[{','.join(variables)}]"
        self.zero = Polynomial(self, {})
        self.one = self.constant(base.one)

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and self.base == other.base
                and self.vars == other.vars and self.order == other.order)

    def __hash__(self):
        return hash((self.base, self.vars, self.order))

    def __repr__(self):
        return self.tag if self.order == "degrevlex" else f"{self.tag} {self.order}"

    def with_order(self, order):
        return PolynomialRing(self.base, self.vars, order)

    def constant(self, c):
        c = self.base(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, name):
        i = self.vars.index(name)
        e = tuple(1 if k == i else 0 for k in range(self.nvars))
        return Polynomial(self, {e: self.base.one})

    def gens(self):
        return tuple(self.gen(v) for v in self.vars)

    def monomial(self, exps, coeff=None):
        c = self.base.one if coeff is None else self.base(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_dict(self, terms):
        base = self.base
        out = {}
        for e, c in terms.items():
            c = base(c)
            if c:
                out[tuple(e)] = c
        return Polynomial(self, out)

    def convert(self, x):
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            return self._map_in(x)
        return self.constant(x)

    def _map_in(self, p):
        """Bring a polynomial from a ring over a subset of our variables."""
        idx = []
        for v in p.ring.vars:
            if v not in self.vars:
                raise TypeError(f"{p} does not live in {self}")
            idx.append(self.vars.index(v))
        out = {}
        for e, c in p.terms.items():
            f = [0] * self.nvars
            for k, x in zip(idx, e):
                f[k] = x
            out[tuple(f)] = self.base(c)
        return Polynomial(self, out)

    def is_unit(self, a):
        return a.is_constant() and self.base.is_unit(a.constant_value())

    def inv(self, a):
        if not self.is_unit(a):
            raise ZeroDivisionError(f"{a} is not a unit in {self}")
        return self.constant(self.base.inv(a.constant_value()))

    # Euclidean structure of K[x]
    def norm(self, a):
        self.require(EUCLIDEAN, "norm")
        return a.degree() if a else -1

    def normalize(self, a):
        if not a:
            return self.zero, self.one
        lc = a.leading_coefficient()
        if self.base.is_field:
            return a * self.base.inv(lc), self.constant(lc)
        canon, unit = self.base.normalize(lc)
        return (a * unit, self.constant(unit)) if unit != self.base.one else (a, self.one)

    def divmod(self, a, b):
        self.require(EUCLIDEAN, "polynomial division with remainder")
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        base = self.base
        lb = b.leading_coefficient()
        db = b.degree()
        inv = base.inv(lb)
        q = {}
        r = dict(a.terms)
        while r:
            dr = max(e[0] for e in r)
            if dr < db:
                break
            c = r[(dr,)] * inv
            s = dr - db
            q[(s,)] = c
            for (e,), bc in b.terms.items():
                k = (e + s,)
                v = r.get(k, base.zero) - c * bc
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return Polynomial(self, q), Polynomial(self, r)

    def render(self, a):
        return str(a)

    def parse(self, text):
        from ..syntax import parse_polynomial
        return parse_polynomial(text, self)


def _render_coeff(c):
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def _is_negative(c):
    if isinstance(c, (int, Fraction)):
        return c < 0
    return False


class Polynomial:
    """Immutable polynomial: a dict from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_lt")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._lt = None

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise TypeError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction, GFElement)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            v = c if v is None else v + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

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
        if isinstance(other, (int, Fraction, GFElement)):
            c = self.ring.base(other)
            if not c:
                return self.ring.zero
            return Polynomial(self.ring, {e: v * c for e, v in self.terms.items() if v * c})
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                v = c1 * c2 if v is None else v + c1 * c2
                out[e] = v
        return Polynomial(self.ring, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a unit (a nonzero constant over a field)."""
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * self.ring.inv(o)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        if len(self.terms) == 1 and (0,) * self.ring.nvars in self.terms:
            return hash(self.terms[(0,) * self.ring.nvars])
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        return self.terms.get((0,) * self.ring.nvars, self.ring.base.zero)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.base.zero)

    def sorted_terms(self):
        """Terms ``(exps, coeff)`` in strictly descending monomial order."""
        key = self.ring.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_term(self):
        if self._lt is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading term")
            key = self.ring.key
            e = max(self.terms, key=key)
            self._lt = (e, self.terms[e])
        return self._lt

    def leading_monomial(self):
        return self.leading_term()[0]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def monic(self):
        if not self:
            return self
        return self * self.ring.base.inv(self.leading_coefficient())

    def degree(self, var=None):
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        i = self.ring.vars.index(var)
        return max(e[i] for e in self.terms)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return tuple(self.ring.vars[i] for i in sorted(used))

    def evaluate(self, values):
        """Substitute ``values`` (a mapping var -> element of some ring)."""
        total = 0
        for e, c in self.terms.items():
            t = c
            for v, x in zip(self.ring.vars, e):
                if x:
                    t = t * values[v] ** x
            total = total + t
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(v if x == 1 else f"{v}^{x}" for v, x in zip(self.ring.vars, e) if x)
            neg = _is_negative(c)
            a = -c if neg else c
            if not mono:
                body = _render_coeff(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_render_coeff(a)}*{mono}"
            parts.append((neg, body))
        out = ("-" if parts[0][0] else "") + parts[0][1]
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"Polynomial({self.ring!r}, {self})"
