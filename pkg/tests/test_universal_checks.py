from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from univalg.universal_checks import (FiniteFunction, FiniteRelation, FiniteSet, Partition, add, add_bits,
                                      bits_of, canonical_product, check_natural_type, check_pair_constructor,
                                      check_projections, check_semiring_iso, check_set_quotient,
                                      constructor_from_projections, equivalence_closure, from_binary, mul,
                                      mul_bits, projections_from_constructor, quotient_set, render,
                                      structure_from_json, to_binary, value_of)


def warshall(carrier, pairs):
    """Reflexive, symmetric, transitive closure by repeated squaring of a boolean matrix."""
    idx = {x: i for i, x in enumerate(carrier)}
    n = len(carrier)
    M = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        M[idx[a]][idx[b]] = M[idx[b]][idx[a]] = True
    for k in range(n):
        for i in range(n):
            if M[i][k]:
                for j in range(n):
                    M[i][j] = M[i][j] or M[k][j]
    return {(carrier[i], carrier[j]) for i in range(n) for j in range(n) if M[i][j]}


def is_bijection(domain, codomain, f):
    image = [f(x) for x in domain]
    return sorted(image, key=repr) == sorted(codomain, key=repr) and len(set(image)) == len(image)


def test_pair_constructor_examples():
    A, B = FiniteSet([0, 1]), FiniteSet(["x"])
    P = FiniteSet([0, 1])
    assert check_pair_constructor(A, B, P, lambda a, b: a)
    bad = check_pair_constructor(A, B, P, lambda a, b: 0)
    assert not bad and bad.counterexample[0] in ("missed", "hit twice")
    empty = FiniteSet([])
    assert check_pair_constructor(empty, B, empty, lambda a, b: a)
    assert check_pair_constructor(A, B, P, {(0, "x"): 1, (1, "x"): 0})
    assert check_pair_constructor(A, B, P, lambda a: lambda b: 1 - a)


def test_projections_examples():
    P, f, pa, pb = canonical_product([1, 2], "ab")
    assert check_projections([1, 2], "ab", P, pa, pb)
    res = check_projections([1, 2], "ab", P, pa, lambda p: "a")
    assert not res and res.counterexample[0] in ("missing", "not unique")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_constructor_and_projections_agree(na, nb, data):
    A, B = FiniteSet(range(na)), FiniteSet("abc"[:nb])
    np_ = data.draw(st.integers(0, 5))
    P = FiniteSet(range(np_))
    pairs = list(product(A, B))
    if np_:
        graph = {ab: data.draw(st.integers(0, np_ - 1)) for ab in pairs}
    elif pairs:
        return
    else:
        graph = {}
    c = bool(check_pair_constructor(A, B, P, graph))
    oracle = is_bijection(pairs, list(P), graph.__getitem__)
    assert c == oracle
    proj = projections_from_constructor(A, B, P, graph)
    if proj is None:
        return
    assert c == bool(check_projections(A, B, P, *proj))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 6), st.data())
def test_projections_then_constructor(na, nb, np_, data):
    A, B, P = FiniteSet(range(na)), FiniteSet(range(nb)), FiniteSet(range(np_))
    pa = {p: data.draw(st.integers(0, na - 1)) for p in P}
    pb = {p: data.draw(st.integers(0, nb - 1)) for p in P}
    ok = bool(check_projections(A, B, P, pa, pb))
    oracle = is_bijection(list(P), list(product(A, B)), lambda p: (pa[p], pb[p]))
    assert ok == oracle
    f = constructor_from_projections(A, B, P, pa, pb)
    if f is None:
        assert not ok
        return
    assert ok == bool(check_pair_constructor(A, B, P, f))


def test_closure_examples():
    X = FiniteSet([1, 2, 3])
    assert equivalence_closure(FiniteRelation(X, [])) == Partition(X, [[1], [2], [3]])
    assert equivalence_closure(FiniteRelation(X, [(1, 2), (2, 3)])) == Partition(X, [[1, 2, 3]])
    assert equivalence_closure(FiniteRelation(X, [(3, 3)])) == Partition(X, [[1], [2], [3]])


relations = st.integers(1, 6).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=8)))


@settings(max_examples=200, deadline=None)
@given(relations)
def test_closure_matches_warshall(rel):
    n, pairs = rel
    X = FiniteSet(range(n))
    part = equivalence_closure(FiniteRelation(X, pairs))
    assert part.relation().pairs == warshall(list(range(n)), pairs)
    # idempotent and finest among partitions containing R
    assert equivalence_closure(part.relation()) == part
    assert all(part.same(a, b) for a, b in pairs)


@settings(max_examples=150, deadline=None)
@given(relations)
def test_quotient_set_is_a_quotient(rel):
    n, pairs = rel
    R = FiniteRelation(FiniteSet(range(n)), pairs)
    Q, q = quotient_set(R)
    res = check_set_quotient(Q, q, R)
    assert res.ok
    assert res.closed == (not R.is_equivalence())


def test_set_quotient_examples():
    X = FiniteSet([1, 2])
    R = FiniteRelation(X, [(1, 2)])
    assert check_set_quotient(FiniteSet(["*"]), {1: "*", 2: "*"}, R).ok
    assert not check_set_quotient(FiniteSet(["a", "b"]), {1: "a", 2: "b"}, R)
    assert not check_set_quotient(FiniteSet(["a", "b", "c"]), {1: "a", 2: "a"}, R)


def test_natural_type_examples():
    N = FiniteSet(range(10))
    assert check_natural_type(N, 0, lambda n: n + 1, 20)
    res = check_natural_type(FiniteSet([0, 1]), 0, {0: 1, 1: 0}, 5)
    assert not res and res.counterexample[0] == "repetition"
    res = check_natural_type(FiniteSet([0, 1, 2]), 0, {0: 1, 1: 1}, 5)
    assert not res
    with pytest.raises(ValueError):
        check_natural_type(N, 0, lambda n: n + 1, 0)


def test_structure_from_json():
    assert structure_from_json({"set": [1, 2]}) == FiniteSet([1, 2])
    f = structure_from_json({"domain": [1, 2], "codomain": ["a"], "graph": {1: "a", 2: "a"}})
    assert isinstance(f, FiniteFunction) and f.is_surjective()
    r = structure_from_json({"carrier": [1, 2], "pairs": [[1, 2]]})
    assert r.holds(1, 2)


def test_binary_examples():
    assert to_binary(0) == () and from_binary(()) == 0
    assert render(to_binary(5)) == "101" and render(()) == "0"
    assert from_binary(add(to_binary(3), to_binary(5))) == 8
    assert from_binary(mul(to_binary(6), to_binary(7))) == 42


@given(st.integers(0, 10**12), st.integers(0, 10**12))
def test_binary_homomorphism(n, m):
    assert from_binary(to_binary(n)) == n
    assert from_binary(add(to_binary(n), to_binary(m))) == n + m
    assert from_binary(mul(to_binary(n), to_binary(m))) == n * m
    b = to_binary(n)
    assert to_binary(from_binary(b)) == b
    assert not b or b[-1] == 1


def test_bit_plane_arithmetic():
    rng = np.random.default_rng(0)
    x = rng.integers(0, 1 << 12, size=500)
    y = rng.integers(0, 1 << 12, size=500)
    X, Y = bits_of(x, 12), bits_of(y, 12)
    assert (value_of(add_bits(X, Y)) == x + y).all()
    assert (value_of(mul_bits(X, Y)) == x * y).all()


def test_semiring_iso_small():
    assert check_semiring_iso(64) == (True, None)
