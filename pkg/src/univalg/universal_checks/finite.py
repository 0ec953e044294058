"""Exhaustive checks of product, quotient and natural-number characterizations on finite sets."""

from collections import namedtuple
from itertools import product

from scipy.cluster.hierarchy import DisjointSet


class FiniteSet:
    """An ordered finite set of distinct labels."""

    def __init__(self, labels):
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            raise ValueError("labels of a finite set must be distinct")
        self.labels = labels
        self._index = {x: i for i, x in enumerate(labels)}

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.labels)

    def __contains__(self, x):
        return x in self._index

    def index(self, x):
        return self._index[x]

    def __eq__(self, other):
        return isinstance(other, FiniteSet) and set(self.labels) == set(other.labels)

    def __hash__(self):
        return hash(frozenset(self.labels))

    def __repr__(self):
        return "{" + ", ".join(map(str, self.labels)) + "}"


def _as_set(X):
    return X if isinstance(X, FiniteSet) else FiniteSet(X)


class FiniteFunction:
    """A total function between finite sets, stored as its graph."""

    def __init__(self, domain, codomain, graph):
        self.domain = _as_set(domain)
        self.codomain = _as_set(codomain)
        if callable(graph) and not isinstance(graph, dict):
            graph = {x: graph(x) for x in self.domain}
        graph = dict(graph)
        for x in self.domain:
            if x not in graph:
                raise ValueError(f"function is not total: no value at {x!r}")
            if graph[x] not in self.codomain:
                raise ValueError(f"value {graph[x]!r} at {x!r} is outside the codomain")
        self.graph = {x: graph[x] for x in self.domain}

    def __call__(self, x):
        return self.graph[x]

    def is_surjective(self):
        return set(self.graph.values()) == set(self.codomain)

    def fibers(self):
        out = {y: [] for y in self.codomain}
        for x, y in self.graph.items():
            out[y].append(x)
        return out


class FiniteRelation:
    def __init__(self, carrier, pairs):
        self.carrier = _as_set(carrier)
        self.pairs = frozenset((a, b) for a, b in pairs)
        for a, b in self.pairs:
            if a not in self.carrier or b not in self.carrier:
                raise ValueError(f"pair {(a, b)!r} is not in the carrier")

    def __contains__(self, pair):
        return tuple(pair) in self.pairs

    def holds(self, a, b):
        return (a, b) in self.pairs

    def is_equivalence(self):
        C = self.carrier
        if any((a, a) not in self.pairs for a in C):
            return False
        if any((b, a) not in self.pairs for a, b in self.pairs):
            return False
        for a, b in self.pairs:
            for c in C:
                if (b, c) in self.pairs and (a, c) not in self.pairs:
                    return False
        return True

    @classmethod
    def identity(cls, carrier):
        carrier = _as_set(carrier)
        return cls(carrier, [(a, a) for a in carrier])

    @classmethod
    def total(cls, carrier):
        carrier = _as_set(carrier)
        return cls(carrier, product(carrier, carrier))


class Partition:
    """Disjoint non-empty blocks covering the carrier, kept in carrier order."""

    def __init__(self, carrier, blocks):
        self.carrier = _as_set(carrier)
        seen = set()
        out = []
        for b in blocks:
            b = list(b)
            if not b:
                raise ValueError("partition blocks must be non-empty")
            for x in b:
                if x not in self.carrier:
                    raise ValueError(f"{x!r} is not in the carrier")
                if x in seen:
                    raise ValueError(f"{x!r} lies in two blocks")
                seen.add(x)
            out.append(tuple(sorted(b, key=self.carrier.index)))
        if len(seen) != len(self.carrier):
            raise ValueError("blocks do not cover the carrier")
        out.sort(key=lambda b: self.carrier.index(b[0]))
        self.blocks = tuple(out)
        self._block_of = {x: i for i, b in enumerate(self.blocks) for x in b}

    def block_of(self, x):
        return self._block_of[x]

    def same(self, a, b):
        return self._block_of[a] == self._block_of[b]

    def relation(self):
        return FiniteRelation(self.carrier, [(a, b) for blk in self.blocks for a in blk for b in blk])

    def refines(self, other):
        return all(other.same(a, b) for blk in self.blocks for a in blk for b in blk)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def __repr__(self):
        return " | ".join("{" + ", ".join(map(str, b)) + "}" for b in self.blocks)


class CheckResult(namedtuple("CheckResult", "ok counterexample")):
    """Verdict of an exhaustive check; falsy results carry a counterexample."""

    def __bool__(self):
        return bool(self.ok)


PASS = CheckResult(True, None)


def check_pair_constructor(A, B, P, f):
    """Every ``p`` in ``P`` equals ``f(a)(b)`` for exactly one pair ``(a, b)``.

    ``f`` is a curried function ``f(a)(b)``, a two-argument function, or a
    dict keyed by pairs.
    """
    A, B, P = _as_set(A), _as_set(B), _as_set(P)
    value = _binary(f)
    hits = {p: [] for p in P}
    for a, b in product(A, B):
        p = value(a, b)
        if p not in P:
            return CheckResult(False, ("outside", (a, b), p))
        hits[p].append((a, b))
    for p in P:
        if not hits[p]:
            return CheckResult(False, ("missed", p))
        if len(hits[p]) > 1:
            return CheckResult(False, ("hit twice", p, hits[p][:2]))
    return PASS


def _binary(f):
    if isinstance(f, dict):
        return lambda a, b: f[(a, b)]

    def value(a, b):
        try:
            return f(a, b)
        except TypeError:
            return f(a)(b)
    return value


def check_projections(A, B, P, p_A, p_B):
    """For all ``a, b`` there is exactly one ``p`` with ``p_A(p) == a`` and ``p_B(p) == b``."""
    A, B, P = _as_set(A), _as_set(B), _as_set(P)
    pa = p_A.__getitem__ if isinstance(p_A, dict) else p_A
    pb = p_B.__getitem__ if isinstance(p_B, dict) else p_B
    found = {(a, b): [] for a, b in product(A, B)}
    for p in P:
        key = (pa(p), pb(p))
        if key not in found:
            return CheckResult(False, ("outside", p, key))
        found[key].append(p)
    for key, ps in found.items():
        if not ps:
            return CheckResult(False, ("missing", key))
        if len(ps) > 1:
            return CheckResult(False, ("not unique", key, ps[:2]))
    return PASS


def projections_from_constructor(A, B, P, f):
    """Projections read off from ``f``: the first ``(a, b)`` in order hitting ``p``.

    Elements of P that ``f`` misses go to the first pair of ``A x B``.
    """
    A, B, P = _as_set(A), _as_set(B), _as_set(P)
    value = _binary(f)
    first = {}
    for a, b in product(A, B):
        first.setdefault(value(a, b), (a, b))
    if not len(A) or not len(B):
        return None
    default = (A.labels[0], B.labels[0])
    coords = {p: first.get(p, default) for p in P}
    return {p: c[0] for p, c in coords.items()}, {p: c[1] for p, c in coords.items()}


def constructor_from_projections(A, B, P, p_A, p_B):
    """``f(a, b)`` = first ``p`` with the right projections, else the first element of P.

    Returns None when ``P`` is empty but ``A x B`` is not (no function exists).
    """
    A, B, P = _as_set(A), _as_set(B), _as_set(P)
    pa = p_A.__getitem__ if isinstance(p_A, dict) else p_A
    pb = p_B.__getitem__ if isinstance(p_B, dict) else p_B
    first = {}
    for p in P:
        first.setdefault((pa(p), pb(p)), p)
    pairs = list(product(A, B))
    if pairs and not len(P):
        return None
    return {ab: first.get(ab, P.labels[0] if len(P) else None) for ab in pairs}


def canonical_product(A, B):
    """``A x B`` with its pairing and coordinate projections."""
    A, B = _as_set(A), _as_set(B)
    P = FiniteSet(product(A, B))
    return P, (lambda a, b: (a, b)), (lambda p: p[0]), (lambda p: p[1])


def equivalence_closure(R):
    """The partition of the equivalence relation generated by ``R``."""
    ds = DisjointSet(R.carrier.labels)
    for a, b in sorted(R.pairs, key=lambda ab: (R.carrier.index(ab[0]), R.carrier.index(ab[1]))):
        ds.merge(a, b)
    return Partition(R.carrier, ds.subsets())


class QuotientCheck(namedtuple("QuotientCheck", "ok counterexample closed")):
    def __bool__(self):
        return bool(self.ok)


def check_set_quotient(Q, q, R):
    """``q: A -> Q`` is surjective and ``q(a) == q(b)`` iff ``R(a, b)``.

    ``A`` is the carrier of ``R``.  If ``R`` is not an equivalence relation
    it is replaced by the one it generates and ``closed`` is set in the result.
    """
    A, Q = R.carrier, _as_set(Q)
    if not isinstance(q, FiniteFunction):
        q = FiniteFunction(A, Q, q)
    if q.domain != A:
        raise ValueError("q must be defined on the carrier of R")
    closed = not R.is_equivalence()
    rel = equivalence_closure(R).relation() if closed else R
    fibers = q.fibers()
    for y in Q:
        if not fibers[y]:
            return QuotientCheck(False, ("not surjective", y), closed)
    for a, b in product(A, A):
        if (q(a) == q(b)) != rel.holds(a, b):
            return QuotientCheck(False, ("iff fails", a, b), closed)
    return QuotientCheck(True, None, closed)


def quotient_set(R):
    """Canonical ``A/R``: the blocks of the generated equivalence, with the class map."""
    part = equivalence_closure(R)
    Q = FiniteSet(part.blocks)
    q = FiniteFunction(R.carrier, Q, {x: part.blocks[part.block_of(x)] for x in R.carrier})
    return Q, q


def check_natural_type(N, n0, s, bound):
    """Bounded check that every element of ``N`` is ``s^i(n0)`` for a unique ``i``.

    The orbit ``n0, s(n0), ..., s^bound(n0)`` (stopping early if ``s`` leaves
    ``N``) must not repeat, and every element of ``N`` must occur in it.
    ``s`` may be a dict or a callable; a missing value ends the orbit.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    N = _as_set(N)
    step = (lambda x: s.get(x)) if isinstance(s, dict) else s
    if n0 not in N:
        return CheckResult(False, ("start outside", n0))
    orbit = {n0: 0}
    x = n0
    for i in range(1, bound + 1):
        try:
            x = step(x)
        except (KeyError, IndexError, ValueError):
            break
        if x is None or x not in N:
            break
        if x in orbit:
            return CheckResult(False, ("repetition", x, orbit[x], i))
        orbit[x] = i
    for y in N:
        if y not in orbit:
            return CheckResult(False, ("outside orbit", y))
    return PASS


def structure_from_json(data):
    """Build finite structures from a plain description.

    ``{"set": [...]}`` gives a FiniteSet, ``{"domain", "codomain", "graph"}``
    a FiniteFunction and ``{"carrier", "pairs"}`` a FiniteRelation.
    """
    if "set" in data:
        return FiniteSet(data["set"])
    if "graph" in data:
        return FiniteFunction(data["domain"], data["codomain"], data["graph"])
    if "pairs" in data:
        return FiniteRelation(data["carrier"], [tuple(p) for p in data["pairs"]])
    raise ValueError("unrecognized finite structure")
