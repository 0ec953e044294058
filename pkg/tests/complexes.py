"""Random complexes, chain maps, homotopies and short exact sequences for the tests."""

from math import lcm

import sympy

from univalg.derived_tor import Resolution, free_resolution
from univalg.fp_modules import ModuleHom, PresentedModule, identity, zero_hom
from univalg.homology import Complex, ComplexHom, SesOfComplexes
from univalg.ring_core import ZZ, Matrix


def integer_left_kernel(rows, ncols):
    """Integer basis-ish generators of ``{c : c * rows == 0}`` via sympy's nullspace."""
    if not rows:
        return []
    M = sympy.Matrix(rows).T
    out = []
    for v in M.nullspace():
        den = lcm(*[int(sympy.fraction(t)[1]) for t in v])
        out.append([int(t * den) for t in v])
    return out


def random_free_complex(rng, ranks=None, entry=3):
    """A complex of free ZZ-modules ``Z^{n_k} -> ... -> Z^{n_0}`` with random differentials."""
    ranks = ranks or [rng.randint(1, 3) for _ in range(rng.randint(2, 4))]
    mods = [PresentedModule.free(ZZ, n) for n in ranks]
    diffs = {}
    prev = None
    for i in range(1, len(ranks)):
        rows_out = ranks[i]
        if prev is None:
            D = [[rng.randint(-entry, entry) for _ in range(ranks[i - 1])] for _ in range(rows_out)]
        else:
            K = integer_left_kernel(prev, ranks[i - 2])
            D = []
            for _ in range(rows_out):
                if K:
                    cs = [rng.randint(-2, 2) for _ in K]
                    D.append([sum(c * k[j] for c, k in zip(cs, K)) for j in range(ranks[i - 1])])
                else:
                    D.append([0] * ranks[i - 1])
        diffs[i] = Matrix(ZZ, D, ranks[i - 1])
        prev = D
    return Complex(mods, diffs)


def random_homotopic_pair(rng, C, D):
    """Chain maps ``phi, psi: C -> D`` with ``phi - psi`` a boundary ``k d + d k``.

    ``phi`` is zero unless ``C is D``, in which case it is the identity.
    """
    phi_maps = {i: identity(C.module(i)) if C is D else zero_hom(C.module(i), D.module(i)) for i in C.degrees()}
    phi = ComplexHom(C, D, phi_maps)
    k = {}
    for i in range(C.lo - 1, C.hi + 1):
        src, tgt = C.module(i), D.module(i + 1)
        k[i] = ModuleHom(src, tgt, Matrix(ZZ, [[rng.randint(-2, 2) for _ in range(tgt.ngens)]
                                               for _ in range(src.ngens)], tgt.ngens))
    psi_maps = {i: phi[i] - (k[i - 1] * C.d(i) + D.d(i + 1) * k[i]) for i in C.degrees()}
    return phi, ComplexHom(C, D, psi_maps), k


def shift(X):
    """``X[-1]``: degree ``i`` holds ``X_{i-1}``, with the differential negated."""
    diffs = {i + 1: -X.d(i).matrix for i in range(X.lo + 1, X.hi + 1)}
    return Complex([X.module(i) for i in X.degrees()], diffs, lo=X.lo + 1)


def cone_ses(f):
    """``0 -> Y -> cone(f) -> X[-1] -> 0`` for a chain map ``f: X -> Y``; its connecting map is ``h(f)``."""
    X, Y = f.source, f.target
    C = shift(X)
    t = {i: f[i - 1].matrix.rows for i in C.degrees()}
    return twisted_ses(Y, C, t)


def twisted_ses(A, C, t):
    """``0 -> A -> B -> C -> 0`` with ``B_i = A_i + C_i`` and ``d^B_i = [[d^A_i, 0], [t_i, d^C_i]]``.

    ``t_i: C_i -> A_{i-1}`` (matrix ``C_i.ngens x A_{i-1}.ngens``) must satisfy the cocycle
    condition ``t_i d^A_{i-1} + d^C_i t_{i-1} == 0`` for B to be a complex.
    """
    R = A.ring
    lo, hi = min(A.lo, C.lo), max(A.hi, C.hi)
    mods, inc, proj = [], {}, {}
    for i in range(lo, hi + 1):
        a, c = A.module(i), C.module(i)
        rels = [tuple(r) + (0,) * c.ngens for r in a.relations.rows] + \
               [(0,) * a.ngens + tuple(r) for r in c.relations.rows]
        mods.append(PresentedModule(R, a.ngens + c.ngens, rels))
    diffs = {}
    for i in range(lo + 1, hi + 1):
        a, c = A.module(i), C.module(i)
        a1, c1 = A.module(i - 1), C.module(i - 1)
        dA, dC = A.d(i).matrix, C.d(i).matrix
        T = t.get(i)
        rows = [tuple(dA.rows[r]) + (0,) * c1.ngens for r in range(a.ngens)]
        for r in range(c.ngens):
            left = tuple(T[r]) if T is not None else (0,) * a1.ngens
            rows.append(left + tuple(dC.rows[r]))
        diffs[i] = Matrix(R, rows, a1.ngens + c1.ngens)
    B = Complex(mods, diffs, lo=lo)
    for i in range(lo, hi + 1):
        a, c = A.module(i).ngens, C.module(i).ngens
        inc[i] = Matrix(R, [[1 if k == j else 0 for k in range(a + c)] for j in range(a)], a + c)
        proj[i] = Matrix(R, [[1 if k == a + j else 0 for j in range(c)] for k in range(a + c)], c)
    return SesOfComplexes(ComplexHom(A, B, inc), ComplexHom(B, C, proj))


def padded_resolution(M, length):
    """The resolution of ``M`` with an extra generator in ``F_0`` killed by an extra generator of ``F_1``."""
    R = M.ring
    base = free_resolution(M, length)
    g = M.ngens
    aug = Matrix(R, [[R.one if j == i else R.zero for j in range(g)] for i in range(g)] + [[R.zero] * g], g)
    diffs = []
    for k, D in enumerate(base.matrices(), start=1):
        rows = [tuple(r) + (R.zero,) for r in D.rows] if k <= 2 else list(D.rows)
        ncols = D.ncols + 1 if k <= 2 else D.ncols
        if k == 1:
            rows.append((R.zero,) * g + (R.one,))
        diffs.append(Matrix(R, rows, ncols))
    if not diffs:
        diffs.append(Matrix(R, [(R.zero,) * g + (R.one,)], g + 1))
    return Resolution(M, diffs, augmentation=aug, truncated=base.truncated)
