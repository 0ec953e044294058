"""Direct sums, tensor products and the equational test for vanishing tensors."""

from collections import namedtuple

from ..ring_core.matrix import Matrix, block_diag, kron, vstack
from .modules import ModuleElement, ModuleHom, PresentedModule, kernel

DirectSum = namedtuple("DirectSum", "module injections projections")
TensorCertificate = namedtuple("TensorCertificate", "pairs m_prime a")


def direct_sum(*modules):
    """``M_1 + ... + M_k`` with block-diagonal relations, injections and projections."""
    if not modules:
        raise ValueError("direct_sum needs at least one module")
    R = modules[0].ring
    if any(M.ring != R for M in modules):
        raise TypeError("direct summands must share a ring")
    S = PresentedModule(R, sum(M.ngens for M in modules),
                        block_diag(*(M.relations for M in modules)))
    inj, proj = [], []
    offset = 0
    for M in modules:
        g = M.ngens
        rows = [tuple(R.one if c == offset + i else R.zero for c in range(S.ngens)) for i in range(g)]
        E = Matrix._raw(R, rows, S.ngens)
        inj.append(ModuleHom(M, S, E, check=False))
        proj.append(ModuleHom(S, M, E.T, check=False))
        offset += g
    return DirectSum(S, inj, proj)


class TensorProduct:
    """``M (x) N`` on generators ``e_i (x) f_j`` (index ``i*N.ngens + j``).

    Relations are ``r (x) f_j`` for relations ``r`` of M and ``e_i (x) s``
    for relations ``s`` of N.
    """

    def __init__(self, M, N):
        if M.ring != N.ring:
            raise TypeError("tensor factors must share a ring")
        R = M.ring
        self.left, self.right = M, N
        g, h = M.ngens, N.ngens
        rels = vstack(kron(M.relations, Matrix.identity(R, h)),
                      kron(Matrix.identity(R, g), N.relations))
        self.module = PresentedModule(R, g * h, rels)

    def index(self, i, j):
        return i * self.right.ngens + j

    def pair(self, m, n):
        """The element ``m (x) n``; the pairing is bilinear by construction."""
        m = m.coeffs if isinstance(m, ModuleElement) else self.left.vector(m)
        n = n.coeffs if isinstance(n, ModuleElement) else self.right.vector(n)
        return ModuleElement(self.module, tuple(a * b for a in m for b in n))

    def factor(self, target, values):
        """Hom ``M (x) N -> target`` induced by a bilinear map given on generator pairs.

        ``values[i][j]`` is the image of ``(e_i, f_j)``.  Raises ``HomError`` when
        the values are not compatible with the relations, that is when they do
        not come from a bilinear map.
        """
        rows = []
        for i in range(self.left.ngens):
            for j in range(self.right.ngens):
                v = values[i][j]
                rows.append(v.coeffs if isinstance(v, ModuleElement) else target.vector(v))
        R = target.ring
        return ModuleHom(self.module, target, Matrix._raw(R, rows, target.ngens))


def tensor_product(M, N):
    return TensorProduct(M, N)


def tensor_hom(f, N, left=None, right=None):
    """``f (x) N : M (x) N -> M' (x) N``.

    Pass the tensor products as ``left``/``right`` to reuse existing objects.
    """
    left = left or TensorProduct(f.source, N)
    right = right or TensorProduct(f.target, N)
    A = kron(f.matrix, Matrix.identity(f.ring, N.ngens))
    return ModuleHom(left.module, right.module, A, check=False)


def hom_tensor(M, g, left=None, right=None):
    """``M (x) g : M (x) N -> M (x) N'``."""
    left = left or TensorProduct(M, g.source)
    right = right or TensorProduct(M, g.target)
    A = kron(Matrix.identity(g.ring, M.ngens), g.matrix)
    return ModuleHom(left.module, right.module, A, check=False)


def swap(T, S):
    """``M (x) N -> N (x) M``, ``m (x) n -> n (x) m``; ``S`` is the tensor product ``N (x) M``."""
    R = T.module.ring
    g, h = T.left.ngens, T.right.ngens
    rows = []
    for i in range(g):
        for j in range(h):
            k = j * g + i
            rows.append(tuple(R.one if c == k else R.zero for c in range(g * h)))
    return ModuleHom(T.module, S.module, Matrix._raw(R, rows, g * h))


def tensor_zero_certificate(M, N, pairs):
    """Decide whether ``sum m_i (x) f_{n_i}`` vanishes in ``M (x) N``.

    ``pairs`` is a list of ``(m_i, n_i)`` with ``m_i`` an element (or vector)
    of M and ``n_i`` a generator index of N.  Returns a ``TensorCertificate``
    with elements ``m_prime[j]`` of M and a matrix ``a`` (rows i, columns j)
    such that ``sum_j a[i][j]*m_prime[j] == m_i`` in M and
    ``sum_i a[i][j]*f_{n_i} == 0`` in N; or None when the element is nonzero.

    Generators of N missing from ``pairs`` are added as ``(0, k)`` so that the
    ``n_i`` generate N; the certificate reports the padded list.
    """
    R = M.ring
    pairs = [(m.coeffs if isinstance(m, ModuleElement) else M.vector(m), int(k)) for m, k in pairs]
    for _, k in pairs:
        if not 0 <= k < N.ngens:
            raise ValueError(f"generator index {k} out of range for N")
    used = {k for _, k in pairs}
    zero = (R.zero,) * M.ngens
    pairs += [(zero, k) for k in range(N.ngens) if k not in used]
    p = len(pairs)
    if all(M.is_zero_vector(m) for m, _ in pairs):
        return TensorCertificate(pairs, [], [[] for _ in range(p)])
    # relations among the n_i: kernel of R^p -> N
    F = PresentedModule.free(R, p)
    B = Matrix._raw(R, [N.gen(k).coeffs for _, k in pairs], N.ngens)
    K, inc = kernel(ModuleHom(F, N, B, check=False))
    cols = list(inc.matrix.rows)  # cols[j][i] = a_ij
    q = len(cols)
    if q == 0:
        return None
    # lift (m_i) through M^q -> M^p, (m'_j) -> (sum_j a_ij m'_j)_i
    g = M.ngens
    Mq = PresentedModule(R, q * g, block_diag(*([M.relations] * q)) if q else ())
    Mp = PresentedModule(R, p * g, block_diag(*([M.relations] * p)))
    A_T = Matrix._raw(R, cols, p)
    phi = ModuleHom(Mq, Mp, kron(A_T, Matrix.identity(R, g)), check=False)
    target = tuple(x for m, _ in pairs for x in m)
    x = phi.lift(target)
    if x is None:
        return None
    m_prime = [x.coeffs[j * g:(j + 1) * g] for j in range(q)]
    a = [[cols[j][i] for j in range(q)] for i in range(p)]
    cert = TensorCertificate(pairs, m_prime, a)
    if not verify_tensor_certificate(M, N, cert):
        raise AssertionError("tensor certificate failed re-verification")
    return cert


def verify_tensor_certificate(M, N, cert):
    R = M.ring
    for i, (m, _) in enumerate(cert.pairs):
        s = [R.zero] * M.ngens
        for a, mp in zip(cert.a[i], cert.m_prime):
            s = [u + a * v for u, v in zip(s, mp)]
        if not M.equal(s, m):
            return False
    for j in range(len(cert.m_prime)):
        s = [R.zero] * N.ngens
        for i, (_, k) in enumerate(cert.pairs):
            s[k] = s[k] + cert.a[i][j]
        if not N.is_zero_vector(s):
            return False
    return True
