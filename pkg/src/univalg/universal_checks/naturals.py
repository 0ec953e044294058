"""Binary natural numbers as bit sequences, compared with unary (Python int) arithmetic.

A binary natural is a tuple of bits, least significant first, with no
trailing zeros, so 0 is the empty tuple.  The ``*_bits`` functions work on
numpy arrays of shape ``(batch, width)`` and are used for exhaustive checks.
"""

import numpy as np


def to_binary(n):
    if n < 0:
        raise ValueError("natural numbers are non-negative")
    bits = []
    while n:
        bits.append(n & 1)
        n >>= 1
    return tuple(bits)


def from_binary(bits):
    n = 0
    for b in reversed(bits):
        n = 2 * n + b
    return n


def render(bits):
    """Most significant bit first, ``0`` for zero."""
    return "".join(str(b) for b in reversed(bits)) or "0"


def _trim(bits):
    bits = list(bits)
    while bits and not bits[-1]:
        bits.pop()
    return tuple(bits)


def add(x, y):
    """Ripple-carry addition of two binary naturals."""
    out = []
    carry = 0
    for i in range(max(len(x), len(y))):
        a = x[i] if i < len(x) else 0
        b = y[i] if i < len(y) else 0
        s = a + b + carry
        out.append(s & 1)
        carry = s >> 1
    if carry:
        out.append(1)
    return _trim(out)


def mul(x, y):
    """Shift-and-add multiplication."""
    acc = ()
    for i, b in enumerate(y):
        if b:
            acc = add(acc, (0,) * i + tuple(x))
    return _trim(acc)


def bits_of(values, width):
    """Bit planes of shape ``(width, batch)``; row ``i`` holds bit ``i`` of every value."""
    values = np.asarray(values, dtype=np.int64)
    return ((values[None, :] >> np.arange(width, dtype=np.int64)[:, None]) & 1).astype(bool)


def value_of(planes):
    out = np.zeros(planes.shape[1], dtype=np.int64)
    for i in range(planes.shape[0] - 1, -1, -1):
        out = 2 * out + planes[i]
    return out


def add_bits(x, y):
    """Batched ripple-carry addition on bit planes; the result is one plane taller.

    Planes may be boolean or bit-packed integers: only ``^ & |`` are used.
    """
    w = max(x.shape[0], y.shape[0])
    n = x.shape[1]
    out = np.zeros((w + 1, n), dtype=x.dtype)
    carry = np.zeros(n, dtype=x.dtype)
    for i in range(w):
        a = x[i] if i < x.shape[0] else False
        b = y[i] if i < y.shape[0] else False
        t = a ^ b
        out[i] = t ^ carry
        carry = (a & b) | (carry & t)
    out[w] = carry
    return out


def mul_bits(x, y):
    """Batched shift-and-add multiplication; the result has ``wx + wy`` planes."""
    wx, n = x.shape
    wy = y.shape[0]
    acc = np.zeros((wx + wy, n), dtype=x.dtype)
    for i in range(wy):
        # acc < 2^(wx+i), so the sum fits in planes i .. i+wx
        acc[i:i + wx + 1] = add_bits(acc[i:i + wx], x & y[i])
    return acc


def check_semiring_iso(limit, chunk=1 << 21):
    """Exhaustive check of the homomorphism equations for all ``0 <= n, m <= limit``.

    Returns ``(ok, first_failure)`` where a failure is ``(op, n, m)``.
    """
    width = max(1, int(limit).bit_length())
    total = (limit + 1) ** 2
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        n, m = idx // (limit + 1), idx % (limit + 1)
        bn = np.packbits(bits_of(n, width), axis=1)
        bm = np.packbits(bits_of(m, width), axis=1)
        for op, got, want in (("+", add_bits(bn, bm), n + m), ("*", mul_bits(bn, bm), n * m)):
            got = np.unpackbits(got, axis=1, count=idx.size).astype(bool)
            bad = np.nonzero(value_of(got) != want)[0]
            if bad.size:
                k = bad[0]
                return False, (op, int(n[k]), int(m[k]))
    return True, None
