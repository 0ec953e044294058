"""Tor as homology of a free resolution tensored with N, and its long exact sequence."""

from collections import namedtuple

from ..fp_modules.modules import ModuleHom, PresentedModule, describe_module, identity, prune
from ..fp_modules.tensor import TensorProduct
from ..homology import (Complex, ComplexHom, SesOfComplexes, connecting_map, induced_map,
                        long_exact_sequence)
from ..ring_core.matrix import Matrix, kron
from .resolution import free_resolution, horseshoe, lift_hom


def tensor_complex(C, N):
    """``C (x) N`` degreewise; differentials ``kron(d_i, I)``."""
    R = C.ring
    I = Matrix.identity(R, N.ngens)
    mods = {i: TensorProduct(C.module(i), N).module for i in C.degrees()}
    d = {i: ModuleHom(mods[i], mods[i - 1], kron(C.d(i).matrix, I), check=False)
         for i in range(C.lo + 1, C.hi + 1)}
    T = Complex([mods[i] for i in C.degrees()], d, lo=C.lo, check=False)
    return T


def tensor_complex_hom(phi, TA, TB, N):
    R = phi.source.ring
    I = Matrix.identity(R, N.ngens)
    maps = {i: ModuleHom(TA.module(i), TB.module(i), kron(phi[i].matrix, I), check=False)
            for i in phi.degrees()}
    return ComplexHom(TA, TB, maps, check=False)


class TorResult:
    """``Tor_n(M, N)`` as ``h_n`` of ``F (x) N`` for the free resolution ``F`` of M.

    ``value`` is the homology module as computed (presented on cycle
    generators); ``pruned`` is an isomorphic presentation with unit
    relations eliminated.
    """

    def __init__(self, M, N, n, resolution=None):
        if n < 0:
            raise ValueError("Tor degree must be non-negative")
        self.M, self.N, self.n = M, N, n
        self.resolution = resolution or free_resolution(M, max(n + 1, 1))
        if self.resolution.truncated and self.resolution.length <= n:
            raise ValueError(f"resolution of length {self.resolution.length} cannot compute Tor_{n}")
        self.complex = tensor_complex(self.resolution.complex, N)
        self.homology = self.complex.cohomology(n)
        self.value = self.homology.module
        self._pruned = None

    @property
    def pruned(self):
        if self._pruned is None:
            self._pruned = prune(self.value)[0]
        return self._pruned

    def is_zero(self):
        return self.value.is_zero()

    def describe(self):
        return describe_module(self.value)

    def __repr__(self):
        return f"Tor_{self.n}(M, N) = {self.describe()}"


def tor(M, N, n, resolution=None):
    return TorResult(M, N, n, resolution)


def tor0_iso(M, N):
    """Mutually inverse homs between ``Tor_0(M, N)`` and ``M (x) N``.

    Both sides are presented on the generators ``e_i (x) f_j``, so the maps
    are identity matrices; constructing them checks well-definedness in both
    directions.
    """
    t = tor(M, N, 0)
    T = TensorProduct(M, N).module
    R = M.ring
    H = t.value
    E = t.homology.inclusion.matrix  # cycle generators in F_0 (x) N
    aug = kron(t.resolution.augmentation.matrix, Matrix.identity(R, N.ngens))
    to = ModuleHom(H, T, E * aug)
    # F_0 (x) N -> M (x) N is onto; lift each generator of M (x) N to a cycle and classify it
    lift_map = ModuleHom(PresentedModule.free(R, aug.nrows), T, aug, check=False)
    back_rows = []
    for g in T.gens():
        x = lift_map.lift(g.coeffs)
        back_rows.append(t.homology.classify(x.coeffs).coeffs)
    back = ModuleHom(T, H, Matrix._raw(R, back_rows, H.ngens))
    return to, back


def tor_map(f, N, n, RM=None, RM2=None):
    """``Tor_n(f, N)`` for ``f: M -> M'`` through a lift to the resolutions."""
    RM = RM or free_resolution(f.source, n + 1)
    RM2 = RM2 or free_resolution(f.target, n + 1)
    tA, tB = TorResult(f.source, N, n, RM), TorResult(f.target, N, n, RM2)
    phi = lift_hom(f, RM, RM2)
    Phi = tensor_complex_hom(phi, tA.complex, tB.complex, N)
    return induced_map(Phi, n), tA, tB


def tor_independence_check(M, N, n, R1, R2):
    """Compare ``Tor_n`` through two resolutions of ``M`` via lifts of the identity.

    Returns ``(to, back)`` with both composites equal to the identity on Tor;
    raises if they are not.
    """
    idM = identity(M)
    t1, t2 = TorResult(M, N, n, R1), TorResult(M, N, n, R2)
    a = lift_hom(idM, R1, R2)
    b = lift_hom(idM, R2, R1)
    to = induced_map(tensor_complex_hom(a, t1.complex, t2.complex, N), n)
    back = induced_map(tensor_complex_hom(b, t2.complex, t1.complex, N), n)
    if not (back * to).equals(identity(t1.value)) or not (to * back).equals(identity(t2.value)):
        raise AssertionError("comparison maps on Tor are not inverse to each other")
    return to, back


TorLES = namedtuple("TorLES", "sequence exactness horseshoe tensored valid_through")


def tor_les(f, g, N, length=2, sign=1):
    """Long exact Tor sequence of ``0 -> A -f-> B -g-> C -> 0`` tensored with ``N``.

    Resolutions of A and C are computed to ``length``; when one of them is
    truncated, Tor values are exact only through degree ``length - 1`` (the
    sequence itself is still an honest long exact sequence of the truncated
    complexes).  ``valid_through`` records that bound, or None if nothing
    was truncated.
    """
    RA = free_resolution(f.source, length)
    RC = free_resolution(g.target, length)
    hs = horseshoe(f, g, RA, RC)
    S = hs.ses
    TA = tensor_complex(S.A, N)
    TB = tensor_complex(S.B, N)
    TC = tensor_complex(S.C, N)
    phi = tensor_complex_hom(S.phi, TA, TB, N)
    psi = tensor_complex_hom(S.psi, TB, TC, N)
    TS = SesOfComplexes(phi, psi)
    L, report = long_exact_sequence(TS, sign)
    truncated = RA.truncated or RC.truncated or hs.resolution.truncated
    valid = None
    if truncated:
        valid = min(RA.length, RC.length, hs.resolution.length) - 1
    return TorLES(L, report, hs, TS, valid)


def tor_delta_naturality(les1, les2, alpha, gamma, N, n, sign=1):
    """Check ``delta' o Tor_n(gamma) == Tor_{n-1}(alpha) o delta`` for a morphism of sequences.

    ``alpha: A -> A'`` and ``gamma: C -> C'`` are the outer components of a
    morphism between the short exact sequences behind ``les1`` and ``les2``.
    """
    hs1, hs2 = les1.horseshoe, les2.horseshoe
    a = lift_hom(alpha, hs1.left, hs2.left)
    c = lift_hom(gamma, hs1.right, hs2.right)
    T1, T2 = les1.tensored, les2.tensored
    Ta = tensor_complex_hom(a, T1.A, T2.A, N)
    Tc = tensor_complex_hom(c, T1.C, T2.C, N)
    d1 = connecting_map(T1, n, sign)
    d2 = connecting_map(T2, n, sign)
    return (d2 * induced_map(Tc, n)).equals(induced_map(Ta, n - 1) * d1)

