"""Free resolutions, lifting homomorphisms to them and the horseshoe construction."""

from collections import namedtuple

from ..fp_modules.modules import ModuleHom, PresentedModule, kernel
from ..homology import Complex, ComplexHom, Homotopy, SesOfComplexes
from ..poly_gb.span import RowSpan
from ..ring_core.matrix import Matrix, vstack


class ResolutionError(ValueError):
    pass


def _drop_redundant(ring, rows, rank):
    """Remove rows lying in the span of the remaining ones (last rows first)."""
    rows = [r for r in rows if any(r)]
    k = len(rows) - 1
    while k >= 0 and len(rows) > 1:
        others = rows[:k] + rows[k + 1:]
        if RowSpan(ring, others, rank).contains(rows[k]):
            rows = others
        k -= 1
    return rows


class Resolution:
    """``... -> F_1 -> F_0 -> M -> 0`` with every ``F_i`` free.

    ``complex`` holds ``F_0 .. F_n`` in degrees ``0 .. n``; ``augmentation``
    is ``F_0 -> M``.  ``truncated`` is set when the length bound cut off a
    nonzero syzygy module, in which case exactness at ``F_n`` is not claimed.
    Construction verifies exactness everywhere else.
    """

    def __init__(self, module, differentials, augmentation=None, truncated=False, check=True):
        R = module.ring
        self.module = module
        self.ring = R
        self.truncated = truncated
        if augmentation is None:
            augmentation = Matrix.identity(R, module.ngens)
        ranks = [augmentation.nrows] + [D.nrows for D in differentials]
        frees = [PresentedModule.free(R, n) for n in ranks]
        self.augmentation = ModuleHom(frees[0], module, augmentation)
        d = {i + 1: ModuleHom(frees[i + 1], frees[i], D, check=False) for i, D in enumerate(differentials)}
        self.complex = Complex(frees, d, lo=0)
        if check:
            self.verify()

    @property
    def length(self):
        return self.complex.hi

    def F(self, i):
        return self.complex.module(i)

    def d(self, i):
        return self.complex.d(i)

    def verify(self):
        if not self.augmentation.is_surjective():
            raise ResolutionError("F_0 does not surject onto the module")
        K, inc = kernel(self.augmentation)
        for v in inc.matrix.rows:
            if self.d(1).lift(v) is None:
                raise ResolutionError("exactness fails at F_0")
        top = self.length if self.truncated else self.length + 1
        for i in range(1, top):
            K, inc = kernel(self.d(i))
            for v in inc.matrix.rows:
                if self.d(i + 1).lift(v) is None:
                    raise ResolutionError(f"exactness fails at F_{i}")
        return True

    def ranks(self):
        return [self.F(i).ngens for i in self.complex.degrees()]

    def matrices(self):
        return [self.d(i).matrix for i in range(1, self.length + 1)]

    def __repr__(self):
        tail = ", truncated" if self.truncated else ""
        return f"Resolution(ranks={self.ranks()}{tail})"


def free_resolution(M, length=None, minimize=True):
    """Resolve ``M`` by free modules, stopping when a syzygy module vanishes or at ``length``.

    ``F_0`` is free on the generators of ``M`` and ``d_1`` is the relation
    matrix; later differentials are syzygies of the previous ones.  Over
    Euclidean rings syzygies come from the Smith form and form a basis;
    elsewhere redundant generators are dropped when ``minimize`` is set.
    """
    R = M.ring
    if length is None:
        length = getattr(R, "nvars", 0) + 1
    if length < 1:
        raise ValueError("resolution length must be at least 1")
    rows = list(M.relations.rows)
    if minimize and not R.is_euclidean:
        rows = _drop_redundant(R, rows, M.ngens)
    diffs = []
    truncated = False
    if rows:
        diffs.append(Matrix._raw(R, rows, M.ngens))
    while diffs:
        prev = diffs[-1]
        syz = RowSpan(R, prev.rows, prev.ncols).syzygies()
        syz = [s for s in syz if any(s)]
        if minimize and not R.is_euclidean:
            syz = _drop_redundant(R, syz, prev.nrows)
        if not syz:
            break
        if len(diffs) == length:
            truncated = True
            break
        diffs.append(Matrix._raw(R, syz, prev.nrows))
    return Resolution(M, diffs, truncated=truncated)


def _lift_rows(target_rows, D, what):
    R = D.ring
    span = RowSpan(R, D.rows, D.ncols)
    out = []
    for v in target_rows:
        c = span.lift(v)
        if c is None:
            raise ResolutionError(f"cannot lift through {what}")
        out.append(c)
    return out


def _lift_through_aug(res, rows):
    aug = res.augmentation
    out = []
    for v in rows:
        x = aug.lift(v)
        if x is None:
            raise ResolutionError("cannot lift through the augmentation")
        out.append(x.coeffs)
    return out


def lift_hom(f, RM, RN):
    """Lift ``f: M -> N`` to a chain map ``RM.complex -> RN.complex`` over the augmentations."""
    if f.source is not RM.module or f.target is not RN.module:
        raise ResolutionError("resolutions do not match the source and target of f")
    R = f.ring
    E = RM.augmentation.matrix * f.matrix
    maps = {0: Matrix._raw(R, _lift_through_aug(RN, E.rows), RN.F(0).ngens)}
    for i in range(1, RM.length + 1):
        prev = maps[i - 1]
        V = RM.d(i).matrix * prev
        if i > RN.length:
            if not V.is_zero():
                raise ResolutionError(f"target resolution too short to lift degree {i}")
            maps[i] = Matrix.zeros(R, RM.F(i).ngens, RN.F(i).ngens)
            continue
        maps[i] = Matrix._raw(R, _lift_rows(V.rows, RN.d(i).matrix, f"d_{i}"), RN.F(i).ngens)
    return ComplexHom(RM.complex, RN.complex,
                      {i: ModuleHom(RM.F(i), RN.F(i), A, check=False) for i, A in maps.items()})


def lift_homotopy(phi, psi, RM, RN):
    """Homotopy ``k`` between two lifts of the same map, built degree by degree.

    ``k_0`` lifts ``phi_0 - psi_0`` through ``d_1``; then ``k_i`` lifts
    ``phi_i - psi_i - d_i * k_{i-1}`` through ``d_{i+1}`` (row convention).
    """
    R = RM.ring
    k = {}
    prev = Matrix.zeros(R, 0, RN.F(0).ngens)
    for i in range(0, RM.length + 1):
        delta = phi[i].matrix - psi[i].matrix
        if i > 0:
            delta = delta - RM.d(i).matrix * prev
        if delta.is_zero():
            K = Matrix.zeros(R, RM.F(i).ngens, RN.F(i + 1).ngens)
        elif i + 1 > RN.length:
            raise ResolutionError(f"target resolution too short for a homotopy in degree {i}")
        else:
            K = Matrix._raw(R, _lift_rows(delta.rows, RN.d(i + 1).matrix, f"d_{i + 1}"),
                            RN.F(i + 1).ngens)
        k[i] = K
        prev = K
    return Homotopy(phi, psi, {i: ModuleHom(RM.F(i), RN.F(i + 1), K, check=False) for i, K in k.items()})


Horseshoe = namedtuple("Horseshoe", "resolution ses left right")


def horseshoe(f, g, RA, RC):
    """Resolution of ``B`` from ``0 -> A -f-> B -g-> C -> 0`` and resolutions of the ends.

    ``P_n = P^A_n + P^C_n`` with differential ``[[d^A, 0], [lam, d^C]]``; the
    result carries the degreewise split short exact sequence of resolutions.
    """
    A, B, C = f.source, f.target, g.target
    if g.source is not B or RA.module is not A or RC.module is not C:
        raise ResolutionError("horseshoe needs 0 -> A -> B -> C -> 0 with matching resolutions")
    R = B.ring
    # augmentation: P^A_0 -> A -> B, and lifts of the C-augmentation through g
    EA = RA.augmentation.matrix * f.matrix
    S = []
    for v in RC.augmentation.matrix.rows:
        x = g.lift(v)
        if x is None:
            raise ResolutionError("g is not surjective")
        S.append(x.coeffs)
    S = Matrix._raw(R, S, B.ngens)
    aug = vstack(EA, S)
    PA0 = PresentedModule.free(R, RA.F(0).ngens)
    to_B = ModuleHom(PA0, B, EA, check=False)
    n = max(RA.length, RC.length)
    diffs = []
    lam_prev = None
    for i in range(1, n + 1):
        DA = RA.d(i).matrix
        DC = RC.d(i).matrix
        if i == 1:
            target = (-(DC * S)).rows
            lam = []
            for v in target:
                x = to_B.lift(v)
                if x is None:
                    raise ResolutionError("horseshoe: d^C_1 * S does not come from A")
                lam.append(x.coeffs)
        else:
            target = (-(DC * lam_prev)).rows
            DAprev = RA.d(i - 1).matrix
            lam = _lift_rows(target, DAprev, f"d^A_{i - 1}") if target else []
        lam = Matrix._raw(R, lam, RA.F(i - 1).ngens)
        top = [ra + (R.zero,) * DC.ncols for ra in DA.rows]
        bottom = [la + rc for la, rc in zip(lam.rows, DC.rows)]
        diffs.append(Matrix._raw(R, top + bottom, DA.ncols + DC.ncols))
        lam_prev = lam
    truncated = RA.truncated or RC.truncated
    RB = Resolution(B, diffs, augmentation=aug, truncated=truncated)
    inc, proj = {}, {}
    for i in range(0, n + 1):
        a, c = RA.F(i).ngens, RC.F(i).ngens
        I = [tuple(R.one if k == j else R.zero for k in range(a + c)) for j in range(a)]
        P = [tuple(R.one if k == a + j else R.zero for j in range(c)) for k in range(a + c)]
        inc[i] = ModuleHom(RA.F(i), RB.F(i), Matrix._raw(R, I, a + c), check=False)
        proj[i] = ModuleHom(RB.F(i), RC.F(i), Matrix._raw(R, P, c), check=False)
    ses = SesOfComplexes(ComplexHom(RA.complex, RB.complex, inc), ComplexHom(RB.complex, RC.complex, proj))
    return Horseshoe(RB, ses, RA, RC)
