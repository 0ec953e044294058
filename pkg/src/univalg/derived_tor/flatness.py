"""Flatness: a Tor_1 probe over sample ideals and the decision for hypersurfaces S/(f).

For ``S = R[x_1..x_r]`` and nonzero ``f`` over a domain ``R``, ``S/(f)`` is
flat over ``R`` exactly when the coefficients of ``f`` in the outer
variables generate the unit ideal, so the decision is an ideal membership
test with a certificate either way.
"""

from dataclasses import dataclass, field
from itertools import product

from ..fp_modules.modules import PresentedModule
from ..poly_gb.groebner import GroebnerBasis, ideal_membership, split_coefficients
from ..poly_gb.polynomial import PolynomialRing
from ..ring_core.snf import gcd_bezout
from .tor import tor


@dataclass
class ProbeEntry:
    ideal: list
    tor1: object
    zero: bool


def flat_tor_probe(M, ideals):
    """``Tor_1(R/I, M)`` for each ideal ``I`` (a list of generators).

    A nonzero value proves ``M`` is not flat; all zeros only says that no
    sampled ideal detected a failure.
    """
    R = M.ring
    out = []
    for gens in ideals:
        gens = [R(a) for a in gens]
        t = tor(PresentedModule.cyclic(R, *gens), M, 1)
        out.append(ProbeEntry(gens, t, t.is_zero()))
    return out


@dataclass
class FlatnessReport:
    verdict: str
    ring: str
    coefficient_ring: str
    polynomial: str
    split: tuple
    coefficients: list
    certificate: list = None
    groebner_basis: list = None
    gcd: object = None
    witness: dict = field(default=None)
    _coeffs: list = field(default=None, repr=False)
    _cert: list = field(default=None, repr=False)
    _base: object = field(default=None, repr=False)

    @property
    def flat(self):
        return self.verdict == "flat"

    def verify(self):
        """Re-check the certificate from scratch."""
        base = self._base
        if self.flat:
            total = base.zero
            for h, c in zip(self._cert, self._coeffs):
                total = total + h * c
            return total == base.one
        if self.groebner_basis is not None:
            G = GroebnerBasis(self._coeffs, base)
            return not G.contains(base.one)
        g = base.zero
        for c in self._coeffs:
            g = gcd_bezout(base, g, c)[0]
        return not base.is_unit(g)

    def to_json(self):
        out = {
            "verdict": self.verdict,
            "ring": self.ring,
            "coefficient_ring": self.coefficient_ring,
            "polynomial": self.polynomial,
            "split": list(self.split),
            "coefficients": self.coefficients,
        }
        if self.certificate is not None:
            out["certificate"] = {"combination": self.certificate}
        if self.groebner_basis is not None:
            out["certificate"] = {"groebner_basis": self.groebner_basis}
        if self.gcd is not None:
            out["certificate"] = {"gcd": self.gcd}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def hypersurface_flat_check(f, split, witness_degree=None):
    """Decide flatness of ``S/(f)`` over the ring of the non-split variables.

    FLAT comes with ``h`` such that ``sum h_i*c_i == 1`` for the coefficients
    ``c_i``; NOT FLAT comes with a Gröbner basis (or gcd) of the coefficient
    ideal that does not contain 1.  With ``witness_degree`` and a Euclidean
    coefficient ring, a NOT FLAT verdict also computes a nonzero ``Tor_1``
    on a degree-truncated model of ``S/(f)``.
    """
    S = f.ring
    if not f:
        raise ValueError("f must be nonzero")
    base, parts = split_coefficients(f, split)
    keys = sorted(parts, key=lambda m: (sum(m), m))
    coeffs = [parts[m] for m in keys]
    render = base.render
    report = dict(ring=str(S), coefficient_ring=str(base), polynomial=str(f), split=tuple(split),
                  coefficients=[render(c) for c in coeffs], _coeffs=coeffs, _base=base)
    h = ideal_membership(base.one, coeffs, base)
    if h is not None:
        return FlatnessReport(verdict="flat", certificate=[render(x) for x in h], _cert=list(h), **report)
    if isinstance(base, PolynomialRing) and base.is_groebner:
        G = GroebnerBasis(coeffs, base)
        rep = FlatnessReport(verdict="not-flat", groebner_basis=[render(g) for g in G.basis], **report)
    else:
        g = base.zero
        for c in coeffs:
            g = gcd_bezout(base, g, c)[0]
        rep = FlatnessReport(verdict="not-flat", gcd=render(g), **report)
    if witness_degree is not None and base.is_euclidean:
        rep.witness = _truncated_witness(f, split, base, coeffs, witness_degree)
    return rep


def truncated_model(f, split, degree):
    """``S_{<=D} / (f * m : deg m <= D - deg f)`` over the coefficient ring.

    Generators are the monomials of total degree at most ``D`` in the split
    variables; it models ``S/(f)`` in low degrees as a finitely presented
    module over the coefficient ring.
    """
    base, parts = split_coefficients(f, split)
    r = len(split)
    monos = [m for m in product(range(degree + 1), repeat=r) if sum(m) <= degree]
    monos.sort(key=lambda m: (sum(m), m))
    index = {m: i for i, m in enumerate(monos)}
    df = max(sum(m) for m in parts)
    rels = []
    for m in monos:
        if sum(m) + df > degree:
            continue
        row = [base.zero] * len(monos)
        for e, c in parts.items():
            row[index[tuple(a + b for a, b in zip(m, e))]] = c
        rels.append(row)
    return PresentedModule(base, len(monos), rels)


def _truncated_witness(f, split, base, coeffs, degree):
    g = base.zero
    for c in coeffs:
        g = gcd_bezout(base, g, c)[0]
    model = truncated_model(f, split, degree)
    t = tor(PresentedModule.cyclic(base, g), model, 1)
    return {"ideal": [base.render(g)], "degree": degree, "tor1_zero": t.is_zero(),
            "tor1": t.describe()}
