from math import gcd, prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from univalg.fp_modules import (HomError, ModuleHom, PresentedModule, TensorProduct, cokernel, describe_module,
                                direct_sum, identity, image, kernel, prune, swap, tensor_hom, tensor_product,
                                tensor_zero_certificate, verify_tensor_certificate)
from univalg.poly_gb import PolynomialRing
from univalg.ring_core import QQ, ZZ

Qx = PolynomialRing(QQ, ["x"])
x = Qx.gen("x")


def size(M):
    """Order of a finite ZZ-module from its invariant factors; None when infinite."""
    torsion, free = M.invariant_factors()
    return None if free else prod(abs(t) for t in torsion)


def test_describe_examples():
    assert describe_module(PresentedModule(ZZ, 2, [[2, 0], [0, 3]])) == "ZZ/6"
    assert describe_module(PresentedModule(ZZ, 2, [[2, 0]])) == "ZZ/2 + ZZ"
    assert describe_module(PresentedModule.zero(ZZ)) == "0"
    assert describe_module(PresentedModule.cyclic(Qx, x)) == "QQ[x]/(x)"


def test_hom_well_definedness():
    Z2, Z4 = PresentedModule.cyclic(ZZ, 2), PresentedModule.cyclic(ZZ, 4)
    f = ModuleHom(Z2, Z4, [[2]])
    assert f.verify()
    with pytest.raises(HomError):
        ModuleHom(Z2, Z4, [[1]])
    with pytest.raises(ValueError):
        ModuleHom(Z2, Z4, [[1, 0]])


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 11))
def test_cyclic_kernel_cokernel_orders(a, b, k):
    A, B = PresentedModule.cyclic(ZZ, a), PresentedModule.cyclic(ZZ, b)
    if (k * a) % b:
        with pytest.raises(HomError):
            ModuleHom(A, B, [[k]])
        return
    f = ModuleHom(A, B, [[k]])
    K, inc = kernel(f)
    C, proj = cokernel(f)
    ker_oracle = sum(1 for t in range(a) if (k * t) % b == 0)
    img_oracle = len({(k * t) % b for t in range(a)})
    assert size(K) == ker_oracle
    assert size(C) == b // img_oracle
    assert (f * inc).is_zero() and (proj * f).is_zero()
    I, i_inc, core = image(f)
    assert size(I) == img_oracle
    assert (i_inc * core).equals(f)
    assert inc.is_injective() and proj.is_surjective()


int_matrices = st.integers(1, 3).flatmap(lambda g: st.tuples(
    st.just(g), st.lists(st.lists(st.integers(-6, 6), min_size=g, max_size=g), max_size=3)))


@settings(max_examples=100, deadline=None)
@given(int_matrices)
def test_prune_and_sums(data):
    g, rels = data
    M = PresentedModule(ZZ, g, rels)
    P, to, back = prune(M)
    assert (back * to).equals(identity(M)) and (to * back).equals(identity(P))
    assert M.invariant_factors() == P.invariant_factors()
    if len(rels) == g:
        d = abs(sympy.Matrix(rels).det())
        assert size(M) == (d if d else None)
    S = direct_sum(M, PresentedModule.cyclic(ZZ, 3))
    assert (S.projections[0] * S.injections[0]).equals(identity(M))
    assert (S.projections[1] * S.injections[0]).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 12), st.integers(0, 12))
def test_tensor_of_cyclic_groups(a, b):
    T = tensor_product(PresentedModule.cyclic(ZZ, a), PresentedModule.cyclic(ZZ, b)).module
    assert T.invariant_factors() == PresentedModule.cyclic(ZZ, gcd(a, b)).invariant_factors()


polys = st.lists(st.integers(-3, 3), min_size=1, max_size=4).map(
    lambda cs: Qx.from_dict({(i,): c for i, c in enumerate(cs) if c}))


@settings(max_examples=60, deadline=None)
@given(polys.filter(bool), polys.filter(bool))
def test_tensor_over_univariate(f, g):
    T = tensor_product(PresentedModule.cyclic(Qx, f), PresentedModule.cyclic(Qx, g)).module
    X = sympy.Symbol("x")
    as_sym = lambda p: sum(sympy.Rational(c.numerator, c.denominator) * X**e[0] for e, c in p.terms.items())
    assert T.vector_space_dim() == sympy.degree(sympy.gcd(as_sym(f), as_sym(g)), X)


def test_tensor_pairing_and_factor():
    M = PresentedModule(ZZ, 2, [[2, 0]])
    N = PresentedModule.cyclic(ZZ, 4)
    T = TensorProduct(M, N)
    assert T.module.is_zero_vector(T.pair((2, 0), (1,)).coeffs)
    S = TensorProduct(N, M)
    sw = swap(T, S)
    assert (swap(S, T) * sw).equals(identity(T.module))
    # bilinear map M x N -> ZZ/2, (m, n) -> m_0 * n
    Z2 = PresentedModule.cyclic(ZZ, 2)
    h = T.factor(Z2, [[(1,)], [(0,)]])
    assert h(T.pair(M.gen(0), N.gen(0))) == Z2.gen(0)
    with pytest.raises(HomError):
        T.factor(PresentedModule.free(ZZ, 1), [[(1,)], [(0,)]])


def test_tensor_hom_functorial():
    A, B, C = (PresentedModule.cyclic(ZZ, n) for n in (2, 4, 8))
    f = ModuleHom(A, B, [[2]])
    g = ModuleHom(B, C, [[2]])
    N = PresentedModule.cyclic(ZZ, 6)
    TA, TB, TC = (TensorProduct(X, N) for X in (A, B, C))
    lhs = tensor_hom(g * f, N, TA, TC)
    rhs = tensor_hom(g, N, TB, TC) * tensor_hom(f, N, TA, TB)
    assert lhs.equals(rhs)


def test_tensor_zero_certificate_examples():
    Z2, Z3 = PresentedModule.cyclic(ZZ, 2), PresentedModule.cyclic(ZZ, 3)
    cert = tensor_zero_certificate(Z2, Z3, [((1,), 0)])
    assert cert is not None and verify_tensor_certificate(Z2, Z3, cert)
    Z4 = PresentedModule.cyclic(ZZ, 4)
    assert tensor_zero_certificate(Z4, Z2, [((1,), 0)]) is None
    assert tensor_zero_certificate(Z4, Z2, [((2,), 0)]) is not None
    Q1 = PresentedModule.cyclic(Qx, x)
    Q2 = PresentedModule.cyclic(Qx, x - 1)
    assert tensor_zero_certificate(Q1, Q2, [((Qx.one,), 0)]) is not None
    with pytest.raises(ValueError):
        tensor_zero_certificate(Z2, Z3, [((1,), 1)])


def test_vector_space_dims():
    R = PolynomialRing(QQ, ["x", "y"])
    a, b = R.gens()
    M = PresentedModule.cyclic(R, a**2, b**3, a * b)
    assert M.vector_space_dim() == 4
    assert PresentedModule.cyclic(R, a).vector_space_dim() is None
    assert PresentedModule(QQ, 3, [[1, 2, 3]]).vector_space_dim() == 2
