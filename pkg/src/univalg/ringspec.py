"""Ring descriptors as text: ``ZZ``, ``QQ``, ``GF(7)``, ``QQ[x,y]``, ``GF(2)[t] lex``."""

import re

from .ring_core.rings import GF, QQ, ZZ
from .syntax import ParseError, TokenStream, evaluate, parse_expr

_RING_RE = re.compile(r"^\s*(ZZ|QQ|GF\(\s*(\d+)\s*\))\s*(?:\[([^\]]*)\])?\s*(lex|degrevlex)?\s*$")


def parse_ring(text):
    m = _RING_RE.match(text)
    if not m:
        raise ParseError(f"cannot read ring {text!r}; expected ZZ, QQ, GF(p) or one of them "
                         f"followed by [vars]", 1, 1, ("ZZ", "QQ", "GF(p)"))
    name, p, variables, order = m.groups()
    base = ZZ if name == "ZZ" else QQ if name == "QQ" else GF(int(p))
    if variables is None:
        return base
    from .poly_gb.polynomial import PolynomialRing
    names = [v.strip() for v in variables.split(",") if v.strip()]
    return PolynomialRing(base, names, order or "degrevlex")


def parse_element(ring, text):
    """Read a ring element; rational literals are allowed where they make sense."""
    if hasattr(ring, "parse"):
        return ring.parse(text)
    ts = TokenStream.of(text)
    tree = parse_expr(ts)
    if not ts.at_end():
        ts.fail("unexpected token after expression")
    return element_from_tree(ring, tree)


def element_from_tree(ring, tree):
    if hasattr(ring, "from_tree"):
        return ring.from_tree(tree)
    if hasattr(ring, "vars"):
        from .syntax import polynomial_from_tree
        return polynomial_from_tree(tree, ring)

    def leaf(n):
        if n[0] == "var":
            raise ValueError(f"{ring} has no variable {n[1]!r}")
        return ring(n[1])

    def divide(a, b):
        if ring.is_field:
            return a * ring.inv(b)
        q = ring.exact_div(a, b)
        if q is None:
            raise ValueError(f"{a}/{b} is not an element of {ring}")
        return q

    return evaluate(tree, leaf, divide)
