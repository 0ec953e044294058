import pytest
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from univalg.poly_gb import (BudgetExceeded, GroebnerBasis, PolynomialRing, RowSpan, coefficients_wrt,
                             ideal_membership, reduce, s_polynomial, set_pair_budget, syzygy_basis)
from univalg.ring_core import GF, QQ, ZZ

from oracles import in_ideal_bounded, module_truncation_dimension, syzygy_dimension

R = PolynomialRing(QQ, ["x", "y"])
x, y = R.gens()


def expand(h, gens):
    total = gens[0].ring.zero
    for a, g in zip(h, gens):
        total = total + a * g
    return total


def test_parse_and_render_round_trip():
    f = R.parse("3/2*x^2*y - y + 1")
    assert str(f) == "3/2*x^2*y - y + 1"
    assert R.parse(str(f)) == f


def test_reduce_examples():
    r, q = reduce(R.zero, [x])
    assert not r and all(not a for a in q)
    r, q = reduce(x**2, [x])
    assert not r and q == (x,)
    L = PolynomialRing(QQ, ["x", "y"], "lex")
    lx, ly = L.gens()
    r, q = reduce(lx * ly + 1, [lx + ly])
    assert r == -ly**2 + 1 and q == (ly,)
    assert q[0] * (lx + ly) + r == lx * ly + 1


def test_reduce_errors():
    with pytest.raises(ValueError):
        reduce(x, [])
    S = PolynomialRing(QQ, ["u"])
    with pytest.raises(TypeError):
        reduce(x, [S.gen("u")])


def test_buchberger_examples():
    assert GroebnerBasis([x]).basis == (x,)
    G = GroebnerBasis([x + y, x - y])
    assert G.basis == (x, y)
    assert G.verify_transform() and G.check()
    G = GroebnerBasis([1 + x * y, x])
    assert G.basis == (R.one,)
    assert G.transform.row(0) == (R.one, -y)
    assert G.is_unit_ideal()


def test_cyclic3_is_groebner():
    S = PolynomialRing(QQ, ["a", "b", "c"])
    a, b, c = S.gens()
    gens = [a + b + c, a * b + b * c + c * a, a * b * c - 1]
    G = GroebnerBasis(gens)
    assert G.check() and G.verify_transform()
    for g in gens:
        assert G.contains(g)


def test_membership_examples():
    Q1 = PolynomialRing(QQ, ["x"])
    (t,) = Q1.gens()
    assert ideal_membership(Q1.one, [Q1.one, t]) == (Q1.one, Q1.zero)
    h = ideal_membership(R.zero, [x, y])
    assert all(not a for a in h)
    assert ideal_membership(x, [x**2, y]) is None
    assert not in_ideal_bounded(x, [x**2, y], 5)


def test_membership_over_integers():
    h = ideal_membership(1, [4, 6, 9], ZZ)
    assert sum(a * b for a, b in zip(h, [4, 6, 9])) == 1
    assert ideal_membership(3, [4, 6], ZZ) is None


def test_syzygy_examples():
    assert syzygy_basis([x]).nrows == 0
    S = syzygy_basis([x, y])
    assert S.rows == ((y, -x),)
    assert syzygy_basis([2, 3], ZZ).rows == ((3, -2),)


def test_coefficients_wrt_examples():
    S = PolynomialRing(QQ, ["x", "y"])
    sx, sy = S.gens()
    base = PolynomialRing(QQ, ["x"])
    bx = base.gen("x")
    assert coefficients_wrt(1 + sx * sy, ["y"]) == [base.one, bx]
    assert coefficients_wrt(sy**3, ["y"]) == [base.one]
    assert coefficients_wrt(sx * sy + sx**2 * sy**2, ["y"]) == [bx, bx**2]
    with pytest.raises(ValueError):
        coefficients_wrt(sx, ["z"])


def test_budget_is_a_hard_error():
    S = PolynomialRing(QQ, ["a", "b", "c"])
    a, b, c = S.gens()
    gens = [a**3 - b * c, b**3 - a * c, c**3 - a * b, a * b * c - 1]
    assert GroebnerBasis(gens).pairs_processed > 1
    with pytest.raises(BudgetExceeded):
        GroebnerBasis(gens, budget=1)
    set_pair_budget(1)
    try:
        with pytest.raises(BudgetExceeded):
            GroebnerBasis(gens)
    finally:
        set_pair_budget(None)
    assert GroebnerBasis(gens).check()


def to_sympy(p, symbols):
    expr = 0
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(symbols, e):
            term *= s**k
        expr += term
    return expr


small_polys = st.lists(
    st.tuples(st.integers(-3, 3).filter(bool), st.integers(0, 2), st.integers(0, 2)),
    min_size=1, max_size=3,
).map(lambda ts: R.from_dict({(i, j): c for c, i, j in ts}))


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(small_polys, min_size=1, max_size=3), st.sampled_from(["degrevlex", "lex"]))
def test_groebner_matches_sympy(gens, order):
    S = R.with_order(order)
    gens = [S(g) for g in gens if g]
    if not gens:
        return
    G = GroebnerBasis(gens, S)
    assert G.check()
    assert G.verify_transform()
    for g in gens:
        assert G.contains(g)
    X, Y = sympy.symbols("x y")
    ref = sympy.groebner([to_sympy(g, (X, Y)) for g in gens], X, Y, domain="QQ",
                         order="grevlex" if order == "degrevlex" else "lex")
    ours = {sympy.expand(to_sympy(b, (X, Y))) for b in G.basis}
    theirs = {sympy.expand(e / sympy.LC(e, X, Y, order=ref.order)) for e in ref.exprs}
    assert ours == theirs


@settings(max_examples=40, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=3), small_polys, small_polys)
def test_membership_certificates_expand(gens, a, b):
    gens = [g for g in gens if g]
    if not gens:
        return
    f = a * gens[0] + b * gens[-1]
    h = ideal_membership(f, gens)
    assert h is not None and expand(h, gens) == f


@settings(max_examples=30, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=3), small_polys)
def test_non_membership_confirmed_by_bounded_search(gens, f):
    gens = [g for g in gens if g]
    if not gens or ideal_membership(f, gens) is not None:
        return
    assert not in_ideal_bounded(f, gens, 4)


@settings(max_examples=40, deadline=None)
@given(st.lists(small_polys, min_size=1, max_size=3))
def test_syzygies_annihilate(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    for s in syzygy_basis(gens).rows:
        assert not expand(s, gens)


def homogeneous(d):
    mons = [(i, d - i) for i in range(d + 1)]
    return st.lists(st.tuples(st.sampled_from(mons), st.integers(-3, 3).filter(bool)), min_size=1, max_size=3) \
        .map(lambda ts: R.from_dict({m: c for m, c in ts}))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(1, 2).flatmap(homogeneous), min_size=2, max_size=3))
def test_syzygy_completeness_bounded(gens):
    gens = [g for g in gens if g]
    if len(gens) < 2:
        return
    syz = syzygy_basis(gens).rows
    for D in range(1, 5):
        assert module_truncation_dimension(syz, gens, D) == syzygy_dimension(gens, D)


def test_module_span_over_polynomials():
    span = RowSpan(R, [(x, y), (y, x)], 2)
    c = span.lift((x**2 - y**2, R.zero))
    assert c is not None
    assert (c[0] * x + c[1] * y, c[0] * y + c[1] * x) == (x**2 - y**2, R.zero)
    assert not span.contains((x, R.zero))


def test_s_polynomial():
    f, g = x**2 * y - 1, x * y**2 - x
    s = s_polynomial(f, g)
    assert s == y * f - x * g


def test_prime_field_groebner():
    F = PolynomialRing(GF(5), ["x", "y"])
    fx, fy = F.gens()
    G = GroebnerBasis([fx * fy - 1, fx**2 - 2])
    assert G.check() and G.verify_transform()
