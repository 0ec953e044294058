"""Exact coefficient rings: the integers, the rationals and prime fields.

Elements are plain Python values where Python already has an exact type
(``int`` for ZZ, ``fractions.Fraction`` for QQ) and :class:`GFElement` for
residues modulo a prime.  Generic code manipulates elements with the usual
operators and asks the ring object for anything structural (zero, one,
units, Euclidean division).
"""

from fractions import Fraction

FIELD = "field"
EUCLIDEAN = "euclidean"
GROEBNER = "groebner"

PRIME_CAP = 2 ** 61


class CapabilityError(TypeError):
    """An operation was asked of a ring that lacks the needed capability."""


def is_prime(n):
    """Deterministic Miller-Rabin, exact for every n below 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Ring:
    """Base class for ring descriptors."""

    tag = "?"
    capabilities = frozenset()

    @property
    def is_field(self):
        return FIELD in self.capabilities

    @property
    def is_euclidean(self):
        return EUCLIDEAN in self.capabilities

    @property
    def is_groebner(self):
        return GROEBNER in self.capabilities

    def require(self, capability, what):
        if capability not in self.capabilities:
            raise CapabilityError(f"{what} needs a {capability} ring, got {self}")

    def __call__(self, x):
        return self.convert(x)

    def is_zero(self, a):
        return not a

    def sum(self, items):
        total = self.zero
        for x in items:
            total = total + x
        return total

    def exact_div(self, a, b):
        """Return q with q*b == a, or None if b does not divide a."""
        self.require(EUCLIDEAN, "exact division")
        if not b:
            return self.zero if not a else None
        q, r = self.divmod(a, b)
        return q if not r else None

    def render(self, a):
        return str(a)

    def __repr__(self):
        return self.tag


class IntegerRing(Ring):
    tag = "ZZ"
    capabilities = frozenset({EUCLIDEAN})
    zero = 0
    one = 1

    def convert(self, x):
        if isinstance(x, bool):
            return int(x)
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction) and x.denominator == 1:
            return x.numerator
        raise TypeError(f"cannot convert {x!r} to an integer")

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise ZeroDivisionError(f"{a} is not a unit in ZZ")
        return a

    def normalize(self, a):
        """Split ``a`` as ``unit * canonical``; returns ``(canonical, unit)``."""
        return (-a, -1) if a < 0 else (a, 1)

    def divmod(self, a, b):
        return divmod(a, b)

    def norm(self, a):
        return abs(a)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalField(Ring):
    tag = "QQ"
    capabilities = frozenset({FIELD, EUCLIDEAN})
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise TypeError(f"cannot convert {x!r} to a rational")

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        return 1 / Fraction(a)

    def normalize(self, a):
        return (self.one, a) if a else (self.zero, self.one)

    def divmod(self, a, b):
        return a / b, self.zero

    def norm(self, a):
        return 1 if a else 0

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class GFElement:
    """Residue class modulo a prime ``p``; value kept in ``[0, p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p) % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return GFElement(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return GFElement(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return GFElement(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return GFElement(self.value * v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if v == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GFElement(self.value * pow(v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return GFElement(v * pow(self.value, -1, self.p), self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if n < 0:
            return GFElement(pow(self.value, -1, self.p), self.p) ** (-n)
        return GFElement(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self.value == v

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return str(self.value)


class PrimeField(Ring):
    capabilities = frozenset({FIELD, EUCLIDEAN})

    def __init__(self, p):
        if not isinstance(p, int) or not 2 <= p < PRIME_CAP or not is_prime(p):
            raise ValueError(f"GF(p) needs a prime p < 2^61, got {p!r}")
        self.p = p
        self.tag = f"GF({p})"
        self.zero = GFElement(0, p)
        self.one = GFElement(1, p)

    def convert(self, x):
        if isinstance(x, GFElement):
            if x.p != self.p:
                raise ValueError(f"element of GF({x.p}) is not in {self}")
            return x
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return GFElement(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in {self}")
            return GFElement(x.numerator, self.p) / x.denominator
        raise TypeError(f"cannot convert {x!r} to {self}")

    def is_unit(self, a):
        return bool(a)

    def inv(self, a):
        return self.one / a

    def normalize(self, a):
        return (self.one, a) if a else (self.zero, self.one)

    def divmod(self, a, b):
        return a / b, self.zero

    def norm(self, a):
        return 1 if a else 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


ZZ = IntegerRing()
QQ = RationalField()


def GF(p):
    return PrimeField(p)
