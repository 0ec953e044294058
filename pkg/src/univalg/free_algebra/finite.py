"""Finite monoids and groups given by Cayley tables, congruences, quotients and homomorphisms."""

from collections import namedtuple
from itertools import permutations, product

from scipy.cluster.hierarchy import DisjointSet

from ..universal_checks.finite import FiniteSet, Partition


class AxiomError(ValueError):
    pass


class FiniteMonoid:
    """A monoid on ``labels`` with ``table[i][j]`` the index of ``labels[i] * labels[j]``.

    Associativity and a two-sided identity are checked on construction.
    """

    def __init__(self, labels, table, check=True):
        self.carrier = FiniteSet(labels)
        self.labels = self.carrier.labels
        n = len(self.labels)
        self.table = tuple(tuple(row) for row in table)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise AxiomError("Cayley table must be square of the carrier's size")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise AxiomError("Cayley table entry out of range")
        ids = [e for e in range(n)
               if all(self.table[e][i] == i and self.table[i][e] == i for i in range(n))]
        if not ids:
            raise AxiomError("no identity element")
        self.e = ids[0]
        if check:
            t = self.table
            for a, b, c in product(range(n), repeat=3):
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    raise AxiomError(f"not associative at {self.labels[a], self.labels[b], self.labels[c]}")

    @classmethod
    def from_operation(cls, labels, op, **kw):
        labels = tuple(labels)
        index = {x: i for i, x in enumerate(labels)}
        return cls(labels, [[index[op(a, b)] for b in labels] for a in labels], **kw)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(self.labels)

    @property
    def identity(self):
        return self.labels[self.e]

    def index(self, x):
        return self.carrier.index(x)

    def mul(self, a, b):
        return self.labels[self.table[self.index(a)][self.index(b)]]

    def product(self, *xs):
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out

    def __repr__(self):
        return f"{type(self).__name__}(order={len(self)})"


class FiniteGroup(FiniteMonoid):
    def __init__(self, labels, table, check=True):
        super().__init__(labels, table, check=check)
        n = len(self.labels)
        inv = []
        for i in range(n):
            js = [j for j in range(n) if self.table[i][j] == self.e]
            if not js or self.table[js[0]][i] != self.e:
                raise AxiomError(f"{self.labels[i]!r} has no inverse")
            inv.append(js[0])
        self.inv_table = tuple(inv)

    def inv(self, a):
        return self.labels[self.inv_table[self.index(a)]]

    def conj(self, g, h):
        """``g h g^-1``."""
        return self.mul(self.mul(g, h), self.inv(g))

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(len(t)) for b in range(a))

    def is_subgroup(self, H):
        H = set(H)
        return (self.identity in H and all(self.inv(h) in H for h in H)
                and all(self.mul(a, b) in H for a in H for b in H))

    def is_normal(self, H):
        H = set(H)
        return self.is_subgroup(H) and all(self.conj(g, h) in H for g in self for h in H)

    def subgroup(self, gens):
        """The subgroup generated by ``gens``, in carrier order."""
        seen = {self.identity}
        frontier = [self.identity]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return frozenset(seen)

    def cosets(self, H):
        """Left cosets ``gH`` as tuples in carrier order, ordered by first element."""
        H = list(H)
        out, seen = [], set()
        for g in self:
            if g in seen:
                continue
            c = {self.mul(g, h) for h in H}
            seen |= c
            out.append(tuple(x for x in self if x in c))
        return out


def cyclic_group(n):
    """``Z/n`` under addition, labels ``0 .. n-1``."""
    return FiniteGroup(range(n), [[(a + b) % n for b in range(n)] for a in range(n)])


def symmetric_group(n):
    """Permutations of ``0 .. n-1`` in one-line notation; ``(s*t)(i) = s(t(i))``."""
    perms = list(permutations(range(n)))
    return FiniteGroup.from_operation(perms, lambda s, t: tuple(s[t[i]] for i in range(n)))


def congruence_closure(M, pairs):
    """Smallest congruence on ``M`` containing ``pairs``, as a Partition.

    Worklist union-find: each pair that merges two classes schedules its
    left and right translates by every element.
    """
    ds = DisjointSet(M.labels)
    work = list(pairs)
    while work:
        a, b = work.pop()
        if ds.connected(a, b):
            continue
        ds.merge(a, b)
        for c in M:
            work.append((M.mul(a, c), M.mul(b, c)))
            work.append((M.mul(c, a), M.mul(c, b)))
    return Partition(M.carrier, ds.subsets())


def is_congruence(M, P):
    return all(P.same(M.mul(a, c), M.mul(b, c)) and P.same(M.mul(c, a), M.mul(c, b))
               for blk in P.blocks for a in blk for b in blk for c in M)


def quotient_monoid(M, P):
    """``M / P`` on block labels, with the block map; ``P`` must be a congruence."""
    if not is_congruence(M, P):
        raise AxiomError("partition is not a congruence")
    blocks = P.blocks
    table = [[P.block_of(M.mul(a[0], b[0])) for b in blocks] for a in blocks]
    cls = FiniteGroup if isinstance(M, FiniteGroup) else FiniteMonoid
    return cls(blocks, table, check=False), {x: blocks[P.block_of(x)] for x in M}


def normal_closure(G, S):
    """Smallest normal subgroup containing ``S``: generated by all conjugates of ``S``."""
    conjugates = {G.conj(g, s) for g in G for s in S}
    return G.subgroup(sorted(conjugates, key=G.index))


class GroupHom:
    """A homomorphism of finite groups given by its values on every element."""

    def __init__(self, source, target, mapping, check=True):
        self.source, self.target = source, target
        value = mapping if callable(mapping) and not isinstance(mapping, dict) else mapping.__getitem__
        self.mapping = {g: value(g) for g in source}
        if any(v not in target.carrier for v in self.mapping.values()):
            raise AxiomError("values lie outside the target group")
        if check:
            for a, b in product(source, repeat=2):
                if self.mapping[source.mul(a, b)] != target.mul(self.mapping[a], self.mapping[b]):
                    raise AxiomError(f"not a homomorphism at {a!r}, {b!r}")

    def __call__(self, g):
        return self.mapping[g]

    def kernel(self):
        return frozenset(g for g in self.source if self.mapping[g] == self.target.identity)

    def image(self):
        return frozenset(self.mapping.values())

    def is_surjective(self):
        return len(self.image()) == len(self.target)

    def is_injective(self):
        return len(self.image()) == len(self.source)


Quotient = namedtuple("Quotient", "group projection subgroup closed")


def quotient_group(G, H):
    """``G / H`` with the projection ``g -> gH``.

    When ``H`` is not a normal subgroup it is replaced by its normal closure
    and ``closed`` is set; the projection then has that closure as kernel.
    """
    H = frozenset(H)
    closed = not G.is_normal(H)
    if closed:
        H = normal_closure(G, H)
    cosets = G.cosets(H)
    where = {g: c for c in cosets for g in c}
    index = {c: i for i, c in enumerate(cosets)}
    table = [[index[where[G.mul(a[0], b[0])]] for b in cosets] for a in cosets]
    Q = FiniteGroup(cosets, table, check=False)
    pi = GroupHom(G, Q, where)
    return Quotient(Q, pi, H, closed)


def first_iso_check(f):
    """``G/ker f -> im f``, ``gK -> f(g)``, is a well-defined bijective homomorphism."""
    K = f.kernel()
    if not f.source.is_normal(K):
        return False
    Q = quotient_group(f.source, K).group
    induced = {}
    for coset in Q:
        values = {f(g) for g in coset}
        if len(values) != 1:
            return False
        induced[coset] = values.pop()
    image = f.image()
    if set(induced.values()) != image or len(induced) != len(image):
        return False
    T = f.target
    return all(induced[Q.mul(a, b)] == T.mul(induced[a], induced[b]) for a, b in product(Q, repeat=2))
