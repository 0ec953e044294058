"""Finitely presented groups and their abelianizations."""

from collections import namedtuple

from ..fp_modules.modules import PresentedModule
from ..ring_core.matrix import Matrix
from ..ring_core.rings import ZZ
from ..ring_core.snf import smith_normal_form
from ..syntax import TokenStream
from .words import exponent_sums, parse_word, parse_word_tokens, reduce_word, render_word


class FpGroupPresentation:
    """``<generators | relators>`` with relators as signed words."""

    def __init__(self, generators, relators=()):
        self.generators = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be distinct")
        n = len(self.generators)
        self.relators = tuple(tuple(r) for r in relators)
        for r in self.relators:
            if any(x == 0 or abs(x) > n for x in r):
                raise ValueError(f"relator {r} uses letters outside the {n} generators")

    @property
    def ngens(self):
        return len(self.generators)

    @classmethod
    def parse(cls, text):
        ts = TokenStream.of(text)
        gens, rels = cls._parse(ts)
        if not ts.at_end():
            ts.fail("expected end of presentation")
        return cls(gens, rels)

    @staticmethod
    def _parse(ts):
        ts.expect("<")
        gens = []
        while not ts.at("|", ">"):
            gens.append(ts.expect_kind("ident", "generator").text)
            if not ts.accept(","):
                break
        rels = []
        if ts.accept("|"):
            while not ts.at(">"):
                rels.append(parse_word_tokens(ts, gens, stop=(",", ">")))
                if not ts.accept(","):
                    break
        ts.expect(">")
        return gens, rels

    def word(self, text):
        return parse_word(text, self.generators)

    def render(self, w):
        return render_word(w, self.generators)

    def relation_matrix(self):
        rows = [exponent_sums(r, self.ngens) for r in self.relators]
        return Matrix(ZZ, rows, self.ngens) if rows else Matrix.zeros(ZZ, 0, self.ngens)

    def __str__(self):
        rels = ", ".join(self.render(reduce_word(r)) for r in self.relators)
        gens = ", ".join(self.generators)
        return f"<{gens} | {rels}>" if rels else f"<{gens}>"

    __repr__ = __str__


Abelianization = namedtuple("Abelianization", "torsion rank module")


def abelianization(P):
    """``G/[G,G]`` as ``Z^rank + sum Z/d_i`` from the exponent-sum matrix.

    ``module`` is the abelian group presented by that matrix over ZZ, in
    which every relator's exponent-sum vector is zero.
    """
    A = P.relation_matrix()
    if A.nrows:
        factors = smith_normal_form(A).invariant_factors
    else:
        factors = ()
    torsion = tuple(abs(d) for d in factors if abs(d) != 1)
    rank = P.ngens - len(factors)
    return Abelianization(torsion, rank, PresentedModule(ZZ, P.ngens, A.rows))


def describe_abelian(torsion, rank):
    parts = [f"ZZ/{d}" for d in torsion]
    if rank:
        parts.append("ZZ" if rank == 1 else f"ZZ^{rank}")
    return " + ".join(parts) if parts else "0"
