from functools import lru_cache
from itertools import combinations, product
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from univalg.free_algebra import (AxiomError, FiniteGroup, FiniteMonoid, FpGroupPresentation, GroupHom,
                                  abelianization, congruence_closure, cyclic_group, describe_abelian,
                                  exponent_sums, first_iso_check, free_monoid_extend, inverse, is_congruence,
                                  is_reduced, multiply, normal_closure, parse_word, power, quotient_group,
                                  quotient_monoid, reduce_word, render_word, symmetric_group)
from univalg.universal_checks import Partition


@lru_cache(maxsize=None)
def rewrite_normal_forms(w):
    """Every irreducible word reachable by deleting some adjacent ``x x^-1`` pair, in any order."""
    steps = [w[:i] + w[i + 2:] for i in range(len(w) - 1) if w[i] == -w[i + 1]]
    if not steps:
        return frozenset([w])
    return frozenset().union(*(rewrite_normal_forms(s) for s in steps))


def all_words(max_len, letters=(1, -1, 2, -2)):
    for n in range(max_len + 1):
        yield from product(letters, repeat=n)


def test_reduce_word_examples():
    assert reduce_word(()) == ()
    assert reduce_word((1, -1)) == ()
    assert reduce_word((1, 2, -2, 1)) == (1, 1)
    with pytest.raises(ValueError):
        reduce_word((0,))


def test_reduce_word_matches_rewriting_oracle_short():
    for w in all_words(6):
        forms = rewrite_normal_forms(w)
        assert len(forms) == 1
        assert reduce_word(w) == next(iter(forms))


words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=12).map(tuple)


@given(words, words, words)
def test_free_group_laws(u, v, w):
    assert is_reduced(reduce_word(u))
    assert reduce_word(reduce_word(u)) == reduce_word(u)
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))
    assert multiply(u, inverse(u)) == ()
    assert exponent_sums(multiply(u, v), 3) == [a + b for a, b in zip(exponent_sums(u, 3), exponent_sums(v, 3))]


@given(words, st.integers(-4, 4))
def test_power(w, k):
    expected = ()
    for _ in range(abs(k)):
        expected = multiply(expected, w if k > 0 else inverse(w))
    assert power(w, k) == expected


def test_parse_and_render_words():
    letters = ["a", "b"]
    w = parse_word("a^2 b^-2 a", letters)
    assert w == (1, 1, -2, -2, 1)
    assert render_word(w, letters) == "a^2 b^-2 a"
    assert parse_word("(ab)^2", letters) == (1, 2, 1, 2)
    assert parse_word("1", letters) == ()
    assert render_word((), letters) == "1"


@given(st.lists(st.sampled_from([1, -1, 2, -2]), max_size=10).map(tuple))
def test_word_render_parse_round_trip(w):
    letters = ["a", "b"]
    assert parse_word(render_word(w, letters), letters) == w


def test_free_monoid_extend():
    Z3 = cyclic_group(3)
    assert free_monoid_extend([1, 2], (), Z3) == 0
    assert free_monoid_extend([1, 2], (0, 0, 1), Z3) == 1
    S3 = symmetric_group(3)
    h = {0: (1, 0, 2), 1: (0, 2, 1)}
    for u in all_words(3, (0, 1)):
        for v in all_words(2, (0, 1)):
            assert free_monoid_extend(h, u + v, S3) == S3.mul(free_monoid_extend(h, u, S3),
                                                              free_monoid_extend(h, v, S3))


def test_monoid_axioms_checked():
    with pytest.raises(AxiomError):
        FiniteMonoid([0, 1], [[0, 0], [0, 0]])
    with pytest.raises(AxiomError):
        FiniteGroup([0, 1], [[0, 1], [1, 1]])


def brute_congruence(M, pairs):
    """Smallest congruence by enumerating all partitions; fine for |M| <= 5."""
    labels = list(M)

    def partitions(xs):
        if not xs:
            yield []
            return
        head, rest = xs[0], xs[1:]
        for p in partitions(rest):
            for i in range(len(p)):
                yield p[:i] + [[head] + p[i]] + p[i + 1:]
            yield [[head]] + p

    best = None
    for blocks in partitions(labels):
        P = Partition(M.carrier, blocks)
        if all(P.same(a, b) for a, b in pairs) and is_congruence(M, P):
            if best is None or P.refines(best):
                best = P
    return best


@pytest.mark.parametrize("n", [4, 5])
def test_congruence_closure_matches_brute_force(n):
    M = FiniteMonoid.from_operation(range(n), lambda a, b: min(a * b, n - 1))
    for a, b in combinations(range(n), 2):
        assert congruence_closure(M, [(a, b)]) == brute_congruence(M, [(a, b)])
    G = cyclic_group(n)
    for a, b in combinations(range(n), 2):
        P = congruence_closure(G, [(a, b)])
        assert P == brute_congruence(G, [(a, b)])
        Q, q = quotient_monoid(G, P)
        assert len(Q) == gcd(n, b - a)


def test_quotients_and_normal_closure():
    S3 = symmetric_group(3)
    A3 = S3.subgroup([(1, 2, 0)])
    q = quotient_group(S3, A3)
    assert len(q.group) == 2 and not q.closed
    assert q.projection.kernel() == A3
    t = (1, 0, 2)
    q = quotient_group(S3, [S3.identity, t])
    assert q.closed and len(q.group) == 1
    assert normal_closure(S3, [t]) == frozenset(S3)
    assert S3.is_normal(A3) and not S3.is_abelian()


def test_first_isomorphism():
    S3, Z2 = symmetric_group(3), cyclic_group(2)

    def sign(p):
        return sum(1 for i, j in combinations(range(3), 2) if p[i] > p[j]) % 2

    f = GroupHom(S3, Z2, sign)
    assert len(f.kernel()) == 3 and f.is_surjective()
    assert first_iso_check(f)
    Z6, Z3 = cyclic_group(6), cyclic_group(3)
    g = GroupHom(Z6, Z3, lambda a: a % 3)
    assert first_iso_check(g)
    with pytest.raises(AxiomError):
        GroupHom(Z3, Z2, lambda a: a % 2)


def test_abelianization_examples():
    P = FpGroupPresentation.parse("<a, b | a b a^-1 b^-1>")
    ab = abelianization(P)
    assert (ab.torsion, ab.rank) == ((), 2)
    assert describe_abelian(ab.torsion, ab.rank) == "ZZ^2"
    ab = abelianization(FpGroupPresentation.parse("<a | a^3>"))
    assert describe_abelian(ab.torsion, ab.rank) == "ZZ/3"
    ab = abelianization(FpGroupPresentation.parse("<a, b>"))
    assert (ab.torsion, ab.rank) == ((), 2)
    ab = abelianization(FpGroupPresentation.parse("<a, b | a^2, b^4, a b a^-1 b^-1>"))
    assert describe_abelian(ab.torsion, ab.rank) == "ZZ/2 + ZZ/4"
    P = FpGroupPresentation.parse("<a, b | a^2 b^-2 a>")
    assert FpGroupPresentation.parse(str(P)).relators == P.relators


def det(rows):
    if not rows:
        return 1
    return sum((-1) ** j * rows[0][j] * det([r[:j] + r[j + 1:] for r in rows[1:]]) for j in range(len(rows)))


presentations = st.lists(st.lists(st.sampled_from([1, -1, 2, -2]), min_size=1, max_size=6), min_size=1, max_size=3)


@settings(max_examples=100, deadline=None)
@given(presentations)
def test_abelianization_against_determinantal_divisors(rels):
    P = FpGroupPresentation(["a", "b"], [tuple(r) for r in rels])
    ab = abelianization(P)
    rows = [exponent_sums(r, 2) for r in P.relators]
    divisors = []
    for k in (1, 2):
        g = 0
        for rs in combinations(range(len(rows)), k):
            for cs in combinations(range(2), k):
                g = gcd(g, det([[rows[i][j] for j in cs] for i in rs]))
        divisors.append(g)
    # rank of the relation lattice is the largest k with a nonzero divisor
    r = sum(1 for d in divisors if d)
    assert ab.rank == 2 - r
    factors = [divisors[0]] + ([divisors[1] // divisors[0]] if r == 2 else [])
    assert ab.torsion == tuple(d for d in factors[:r] if d != 1)
