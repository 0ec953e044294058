import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import invariant_factors

from univalg.fp_modules import ModuleHom, PresentedModule, identity
from univalg.homology import (Complex, ComplexError, ComplexHom, Homotopy, SesOfComplexes, complex_from_json,
                              complex_to_json, connecting_image, connecting_map, exactness_report,
                              induced_map, long_exact_sequence)
from univalg.ring_core import QQ, ZZ, Matrix

from complexes import cone_ses, random_free_complex, random_homotopic_pair, twisted_ses


def homology_oracle(C, i):
    """``(torsion, rank)`` of ``h_i`` for a complex of free ZZ-modules, from sympy alone."""
    n = C.module(i).ngens
    d_out = sympy.Matrix(C.d(i).matrix.rows) if C.d(i).matrix.nrows and C.module(i - 1).ngens else None
    d_in = sympy.Matrix(C.d(i + 1).matrix.rows) if C.module(i + 1).ngens and n else None
    ker = n - (d_out.rank() if d_out is not None else 0)
    im = d_in.rank() if d_in is not None else 0
    torsion = ()
    if d_in is not None and im:
        fs = invariant_factors(d_in, domain=sympy.ZZ)
        torsion = tuple(int(abs(f)) for f in fs if f and abs(f) != 1)
    return torsion, ker - im


def test_examples():
    Z4 = PresentedModule.cyclic(ZZ, 4)
    C = Complex([Z4, Z4, Z4], {1: [[2]], 2: [[2]]})
    assert C.cohomology(1).is_zero()
    C = Complex([Z4, Z4, Z4], {1: [[2]]})
    assert [C.cohomology(i).module.invariant_factors() for i in (0, 1, 2)] == [((2,), 0), ((2,), 0), ((4,), 0)]
    with pytest.raises(ComplexError):
        Complex([PresentedModule.free(ZZ, 1)] * 3, {1: [[1]], 2: [[1]]})
    Z = PresentedModule.free(ZZ, 1)
    C = Complex([Z, Z], {1: [[2]]})
    assert C.cohomology(0).module.invariant_factors() == ((2,), 0)
    assert C.cohomology(1).is_zero()
    assert exactness_report(Complex([Z, Z], {1: [[1]]})) == {0: True, 1: True}


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_homology_against_sympy(seed):
    C = random_free_complex(random.Random(seed))
    for i in range(C.lo, C.hi + 1):
        assert C.cohomology(i).module.invariant_factors() == homology_oracle(C, i)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_classify_and_representative(seed):
    C = random_free_complex(random.Random(seed))
    for i in C.degrees():
        H = C.cohomology(i)
        for g in H.module.gens():
            z = H.representative(g)
            assert not any(C.d(i).apply(z))
            assert H.module.equal(H.classify(z).coeffs, g.coeffs)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_homotopic_maps_agree_on_homology(seed):
    rng = random.Random(seed)
    C = random_free_complex(rng)
    phi, psi, k = random_homotopic_pair(rng, C, C)
    H = Homotopy(phi, psi, k)
    assert all(H.holds_at(i) for i in C.degrees())
    for i in C.degrees():
        assert induced_map(phi, i).equals(induced_map(psi, i))


def test_homotopy_rejects_wrong_maps():
    rng = random.Random(3)
    C = random_free_complex(rng, [1, 1])
    phi, psi, k = random_homotopic_pair(rng, C, C)
    zero = {i: ModuleHom(C.module(i), C.module(i + 1), Matrix.zeros(ZZ, C.module(i).ngens, C.module(i + 1).ngens))
            for i in k}
    if not all((phi[i] - psi[i]).is_zero() for i in C.degrees()):
        with pytest.raises(ComplexError):
            Homotopy(phi, psi, zero)


def test_connecting_map_of_multiplication():
    Z = PresentedModule.free(ZZ, 1)
    X = Complex([Z])
    two = ComplexHom(X, X, {0: ModuleHom(Z, Z, [[2]])})
    S = cone_ses(two)
    d = connecting_map(S, 1)
    assert d.matrix.rows in (((2,),), ((-2,),))
    assert connecting_map(S, 1, sign=-1).matrix == -d.matrix
    L, report = long_exact_sequence(S)
    assert all(report.values())
    with pytest.raises(ValueError):
        connecting_map(S, 1, sign=2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_long_exact_sequence_of_cones(seed):
    rng = random.Random(seed)
    X = random_free_complex(rng)
    _, f, _ = random_homotopic_pair(rng, X, X)
    S = cone_ses(f)
    L, report = long_exact_sequence(S)
    assert all(report.values())
    L2, report2 = long_exact_sequence(S, sign=-1)
    assert report2 == report
    for i in range(S.degrees().start + 1, S.degrees().stop):
        d1, d2 = connecting_map(S, i), connecting_map(S, i, -1)
        assert d1.equals(-d2)
        HC = S.C.cohomology(i)
        for g in HC.module.gens():
            shifted = [connecting_image(S, i, HC.representative(g), 1, a.coeffs) for a in S.A.module(i).gens()]
            base = connecting_image(S, i, HC.representative(g))
            assert all(S.A.cohomology(i - 1).module.equal(v.coeffs, base.coeffs) for v in shifted)


def test_ses_checks_exactness():
    Z = PresentedModule.free(ZZ, 1)
    X = Complex([Z])
    S = twisted_ses(X, X, {})
    bad = ComplexHom(X, S.B, {0: ModuleHom(Z, S.B.module(0), [[2, 0]])})
    with pytest.raises(ComplexError):
        SesOfComplexes(bad, S.psi)


def test_json_round_trip():
    Q = PresentedModule.free(QQ, 2)
    C = Complex([Q, Q], {1: [[1, 2], [2, 4]]})
    D = complex_from_json(complex_to_json(C))
    assert complex_to_json(D) == complex_to_json(C)
    assert D.cohomology(0).module.vector_space_dim() == 1
