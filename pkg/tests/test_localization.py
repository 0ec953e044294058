from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from univalg.localization import LocalizedRing, MultiplicativeSet, frac_equal, strickland_verify, universal_factor
from univalg.poly_gb import PolynomialRing
from univalg.ring_core import QQ, ZZ

Z2 = LocalizedRing(ZZ, [2])
Z6 = LocalizedRing(ZZ, [2, 3])
Qx = PolynomialRing(QQ, ["x"])
x = Qx.gen("x")
Lx = LocalizedRing(Qx, [x])
X = sympy.Symbol("x")


def as_fraction(a):
    return Fraction(a.num, a.ring.S.product(a.exps))


def as_sympy(a):
    num = sum(sympy.Rational(c.numerator, c.denominator) * X**e[0] for e, c in a.num.terms.items())
    den = sympy.prod([X**e for e in a.exps])
    return sympy.cancel(num / den)


def test_examples():
    assert Z2.fraction(3, [2]) + Z2.divide(5, 8) == Z2.fraction(11, [3])
    assert Z2.inv(Z2(4)) == Z2.fraction(1, [2])
    assert not Z2.is_unit(Z2(6)) and Z6.is_unit(Z6(6))
    assert frac_equal(Z2.fraction(2, [1]), Z2.one)
    assert str(Lx.parse("1/x + x")) == "(x^2 + 1)/x"
    assert Lx.fraction(x**2, [3]) == Lx.fraction(1, [1])
    with pytest.raises(ValueError):
        Z2.divide(1, 3)
    with pytest.raises(ValueError):
        MultiplicativeSet(ZZ, [0])
    with pytest.raises(ZeroDivisionError):
        Z2.inv(Z2(3))


ints = st.integers(-50, 50)
exps = st.integers(0, 4)


@settings(max_examples=200)
@given(ints, exps, exps, ints, exps, exps)
def test_integer_localization_embeds_in_rationals(r, i, j, s, k, l):
    a, b = Z6.fraction(r, [i, j]), Z6.fraction(s, [k, l])
    fa, fb = as_fraction(a), as_fraction(b)
    assert as_fraction(a + b) == fa + fb
    assert as_fraction(a * b) == fa * fb
    assert as_fraction(a - b) == fa - fb
    assert (a == b) == (fa == fb)
    if Z6.is_unit(b):
        assert as_fraction(a / b) == fa / fb


polys = st.lists(st.integers(-3, 3), min_size=1, max_size=4).map(
    lambda cs: Qx.from_dict({(i,): c for i, c in enumerate(cs) if c}))


@settings(max_examples=80, deadline=None)
@given(polys, exps, polys, exps)
def test_polynomial_localization_matches_rational_functions(r, i, s, j):
    a, b = Lx.fraction(r, [i]), Lx.fraction(s, [j])
    assert sympy.simplify(as_sympy(a + b) - (as_sympy(a) + as_sympy(b))) == 0
    assert sympy.simplify(as_sympy(a * b) - as_sympy(a) * as_sympy(b)) == 0
    assert (a == b) == (sympy.simplify(as_sympy(a) - as_sympy(b)) == 0)


@settings(max_examples=60, deadline=None)
@given(polys, exps)
def test_render_parse_round_trip(r, i):
    a = Lx.fraction(r, [i])
    assert Lx.parse(str(a)) == a
    b = Z6.fraction(7, [i, 1])
    assert Z6.parse(str(b)) == b


def test_strickland_clauses():
    sample = [Z2.fraction(r, [k]) for r in range(-3, 4) for k in range(3)] + list(range(-3, 4))
    assert strickland_verify(Z2, sample).passed
    rep = strickland_verify(Z2, sample, q=lambda r: Z2.q(r) * 2)
    assert not rep.passed and not rep.units
    rep = strickland_verify(Lx, [Lx.fraction(x + 1, [2]), x], kernel_claims=[x])
    assert rep.units and rep.decomposition and not rep.kernel


def test_universal_factor_into_rationals():
    f = Fraction
    rep = universal_factor(Z6, f, [Fraction(1, 2), Fraction(1, 3)],
                           fractions=[Z6.fraction(1, [1, 0]), Z6.fraction(3, [1, 1]), Z6.fraction(5, [0, 2])],
                           elements=range(-5, 6))
    assert rep.images == [Fraction(1, 2), Fraction(1, 2), Fraction(5, 9)]
    assert rep.well_defined and rep.commutes
    with pytest.raises(ValueError):
        universal_factor(Z6, f, [Fraction(1, 2), Fraction(1, 2)])
