"""Words over an ordered alphabet, free monoid extension and free group reduction.

A word is a tuple of letter indices.  A signed word is a tuple of nonzero
ints: ``k + 1`` stands for letter ``k`` and ``-(k + 1)`` for its inverse.
"""

from ..syntax import ParseError, TokenStream


def reduce_word(w):
    """Free reduction: cancel adjacent ``x x^-1`` pairs until none remain."""
    out = []
    for x in w:
        if x == 0:
            raise ValueError("0 is not a signed letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def is_reduced(w):
    return all(a != -b for a, b in zip(w, w[1:]))


def multiply(u, v):
    return reduce_word(tuple(u) + tuple(v))


def inverse(w):
    return tuple(-x for x in reversed(w))


def power(w, k):
    if k < 0:
        w, k = inverse(w), -k
    return reduce_word(tuple(w) * k)


def exponent_sums(w, n):
    """Exponent sum of each of the ``n`` letters in ``w``."""
    sums = [0] * n
    for x in w:
        if abs(x) > n:
            raise ValueError(f"letter {abs(x)} is outside an alphabet of {n}")
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return sums


def free_monoid_extend(h, w, monoid):
    """Image of the word ``w`` under the monoid hom extending ``h`` on letters.

    ``monoid`` needs ``identity`` and ``mul(a, b)``; ``h`` maps letter
    indices to elements (a list, a dict or a callable).
    """
    value = h if callable(h) else h.__getitem__
    out = monoid.identity
    for letter in w:
        out = monoid.mul(out, value(letter))
    return out


def _letter(ts, letters):
    tok = ts.expect_kind("ident", "generator")
    name = tok.text
    if name in letters:
        return [letters.index(name) + 1]
    if all(c in letters for c in name):
        return [letters.index(c) + 1 for c in name]
    raise ParseError(f"unknown generator {name!r}", tok.line, tok.col, letters)


def parse_word_tokens(ts, letters, stop=()):
    """Signed word from tokens like ``a b^-1 (a b)^2``; ``1`` is the empty word.

    A run of single-letter generator names such as ``ab`` is read letter by
    letter, and an exponent after it applies to its last letter.
    """
    out = []
    while not ts.at_end() and not ts.at(*stop):
        if ts.peek.kind == "num" and ts.peek.text == "1":
            ts.advance()
            continue
        if ts.accept("("):
            head, body = [], list(parse_word_tokens(ts, letters, stop=(")",)))
            ts.expect(")")
        else:
            run = _letter(ts, letters)
            head, body = run[:-1], run[-1:]
        if ts.accept("^"):
            neg = ts.accept("-") is not None
            k = int(ts.expect_kind("num", "exponent").text)
            body = list(inverse(body)) * k if neg else body * k
        out.extend(head + body)
    return tuple(out)


def parse_word(text, letters):
    letters = list(letters)
    ts = TokenStream.of(text)
    w = parse_word_tokens(ts, letters)
    if not ts.at_end():
        ts.fail("expected a generator")
    return w


def render_word(w, letters, empty="1"):
    """Runs of a letter are written as powers: ``a^2 b^-1``."""
    if not w:
        return empty
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = (j - i) if w[i] > 0 else -(j - i)
        name = letters[abs(w[i]) - 1]
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return " ".join(parts)
