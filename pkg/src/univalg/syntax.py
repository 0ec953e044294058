"""Tokenizer and expression parser shared by polynomial literals and the CLI.

Expressions use ``+ - * / ^`` and parentheses; juxtaposition is rejected,
so ``x y`` is an error rather than a product.  Diagnostics carry a line,
a column and the set of tokens that would have been accepted.
"""

import re
from dataclasses import dataclass, field

_TOKEN_RE = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#[^\n]*)
  | (?P<nl>\n)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<op>[-+*/^()\[\]{},|<>=:;.])
""", re.VERBOSE)


class ParseError(ValueError):
    def __init__(self, message, line, col, expected=()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(sorted(set(expected)))
        hint = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"{line}:{col}: {message}{hint}")


@dataclass(frozen=True)
class Token:
    kind: str  # num, ident, string, op, eof
    text: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    line, line_start = 1, 0
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, m.start() - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


@dataclass
class TokenStream:
    tokens: list
    pos: int = 0
    expected: set = field(default_factory=set)

    @classmethod
    def of(cls, text):
        return cls(tokenize(text))

    @property
    def peek(self):
        return self.tokens[self.pos]

    def at(self, *texts):
        """Lookahead; a miss records ``texts`` as acceptable at this position."""
        t = self.peek
        if t.kind in ("op", "ident") and t.text in texts:
            return True
        self.expected.update(repr(x) for x in texts)
        return False

    def accept(self, text):
        if self.at(text):
            self.expected.clear()
            return self.advance()
        self.expected.add(repr(text))
        return None

    def advance(self):
        t = self.tokens[self.pos]
        if t.kind != "eof":
            self.pos += 1
            self.expected.clear()
        return t

    def expect(self, text):
        t = self.accept(text)
        if t is None:
            self.fail(f"expected {text!r}")
        return t

    def expect_kind(self, kind, what=None):
        t = self.peek
        if t.kind != kind:
            self.expected.add(what or kind)
            self.fail(f"expected {what or kind}")
        self.expected.clear()
        return self.advance()

    def fail(self, message):
        t = self.peek
        found = "end of input" if t.kind == "eof" else repr(t.text)
        raise ParseError(f"{message}, found {found}", t.line, t.col, self.expected)

    def at_end(self):
        return self.peek.kind == "eof"


# Expression trees are nested tuples:
#   ("num", int) ("var", name) ("neg", e) ("pow", e, int) and binary ("+" | "-" | "*" | "/", a, b)

def parse_expr(ts):
    node = _parse_term(ts)
    while ts.at("+", "-"):
        op = ts.advance().text
        node = (op, node, _parse_term(ts))
    return node


def _parse_term(ts):
    node = _parse_unary(ts)
    while ts.at("*", "/"):
        op = ts.advance().text
        node = (op, node, _parse_unary(ts))
    return node


def _parse_unary(ts):
    if ts.at("-"):
        ts.advance()
        return ("neg", _parse_unary(ts))
    if ts.at("+"):
        ts.advance()
        return _parse_unary(ts)
    return _parse_power(ts)


def _parse_power(ts):
    node = _parse_atom(ts)
    if ts.accept("^"):
        sign = -1 if ts.accept("-") else 1
        n = int(ts.expect_kind("num", "exponent").text)
        node = ("pow", node, sign * n)
    return node


def _parse_atom(ts):
    t = ts.peek
    if t.kind == "num":
        ts.advance()
        return ("num", int(t.text))
    if t.kind == "ident":
        ts.advance()
        return ("var", t.text)
    if ts.accept("("):
        node = parse_expr(ts)
        ts.expect(")")
        return node
    ts.expected.update({"number", "identifier", "'('", "'-'"})
    ts.fail("expected an expression")


def evaluate(node, leaf, divide=None):
    """Fold an expression tree; ``leaf`` maps num/var nodes to values."""
    kind = node[0]
    if kind in ("num", "var"):
        return leaf(node)
    if kind == "neg":
        return -evaluate(node[1], leaf, divide)
    if kind == "pow":
        base = evaluate(node[1], leaf, divide)
        if node[2] < 0:
            if divide is None:
                raise ValueError("negative exponents are not allowed here")
            return divide(leaf(("num", 1)), base ** (-node[2]))
        return base ** node[2]
    a = evaluate(node[1], leaf, divide)
    b = evaluate(node[2], leaf, divide)
    if kind == "+":
        return a + b
    if kind == "-":
        return a - b
    if kind == "*":
        return a * b
    if divide is None:
        raise ValueError("division is not allowed here")
    return divide(a, b)


def polynomial_from_tree(node, ring):
    """Evaluate an expression tree in a polynomial ring.

    Division is only allowed by nonzero constants that are units of the
    coefficient ring, so ``3/2*x`` works over QQ but not over ZZ.
    """
    def leaf(n):
        if n[0] == "num":
            return ring.constant(n[1])
        if n[1] not in ring.vars:
            raise ValueError(f"unknown variable {n[1]!r} in {ring}")
        return ring.gen(n[1])

    def divide(a, b):
        if not b.is_constant() or not b:
            raise ValueError(f"cannot divide by {b} in {ring}")
        return a * ring.base.inv(b.constant_value())

    return evaluate(node, leaf, divide)


def parse_polynomial(text, ring):
    ts = TokenStream.of(text)
    tree = parse_expr(ts)
    if not ts.at_end():
        ts.expected.update({"'+'", "'-'", "'*'", "'/'", "'^'"})
        ts.fail("unexpected token after expression")
    return polynomial_from_tree(tree, ring)
