"""Statement parser for the command language (see grammar.ebnf).

Each statement sits on one line; ``;`` separates statements within a line
and ``#`` starts a comment.  Polynomial arguments are kept as expression
trees and evaluated later in the ring chosen at execution time.
"""

from dataclasses import dataclass, field

from ..free_algebra.presentations import FpGroupPresentation
from ..free_algebra.words import parse_word_tokens
from ..syntax import ParseError, Token, TokenStream, parse_expr, tokenize

RING_NAMES = ("ZZ", "QQ", "GF")
ORDERS = ("lex", "degrevlex")

VERBS = (
    "let", "groebner", "reduce", "member", "syzygies", "flatcheck", "resolve", "tor", "torles",
    "tensor", "kernel", "cokernel", "image", "snf", "abelianize", "reduceword", "cohomology",
    "strickland", "set", "show", "run",
)
VALUE_FORMS = ("module", "cyclic", "free", "hom", "complex", "group", "localize", "frac", "poly")


@dataclass(frozen=True)
class Command:
    verb: str
    args: dict = field(default_factory=dict)
    line: int = 1
    col: int = 1


def parse(text):
    """All statements of ``text``, in order; raises ParseError on the first problem."""
    out = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        tokens = [Token(t.kind, t.text, lineno, t.col) for t in tokenize(line)]
        ts = TokenStream(tokens)
        while not ts.at_end():
            if ts.accept(";"):
                continue
            out.append(_statement(ts))
            if not ts.at_end():
                ts.expect(";")
    return out


def parse_one(text):
    cmds = parse(text)
    if len(cmds) != 1:
        raise ParseError(f"expected exactly one statement, found {len(cmds)}", 1, 1)
    return cmds[0]


def _statement(ts):
    t = ts.peek
    if t.kind != "ident" or t.text not in VERBS:
        ts.expected.update(repr(v) for v in VERBS)
        ts.fail("expected a command")
    ts.advance()
    verb = t.text
    if verb == "let":
        name = ts.expect_kind("ident", "name").text
        if name in VERBS or name in VALUE_FORMS or name in RING_NAMES:
            raise ParseError(f"{name!r} is reserved", ts.tokens[ts.pos - 1].line, ts.tokens[ts.pos - 1].col)
        ts.expect("=")
        value = _value(ts)
        return Command("let", {"name": name, "value": value}, t.line, t.col)
    args = _COMMANDS[verb](ts)
    return Command(verb, args, t.line, t.col)


def _value(ts):
    t = ts.peek
    if t.kind == "ident" and t.text in RING_NAMES:
        return Command("ring", {"ring": _ring_literal(ts)}, t.line, t.col)
    if t.kind == "ident" and t.text in VALUE_FORMS:
        ts.advance()
        return Command(t.text, _VALUES[t.text](ts), t.line, t.col)
    if t.kind == "ident" and t.text in VERBS and t.text not in ("let", "set", "show", "run"):
        ts.advance()
        return Command(t.text, _COMMANDS[t.text](ts), t.line, t.col)
    if t.kind == "ident":
        ts.advance()
        return Command("alias", {"name": t.text}, t.line, t.col)
    ts.expected.update(repr(v) for v in RING_NAMES + VALUE_FORMS)
    ts.fail("expected a value")


# rings

def _ring_literal(ts):
    name = ts.advance().text
    p = None
    if name == "GF":
        ts.expect("(")
        p = int(ts.expect_kind("num", "prime").text)
        ts.expect(")")
    variables = None
    if ts.accept("["):
        variables = []
        while not ts.at("]"):
            variables.append(ts.expect_kind("ident", "variable").text)
            if not ts.accept(","):
                break
        ts.expect("]")
    order = None
    if ts.at(*ORDERS):
        order = ts.advance().text
    return ("literal", name, p, tuple(variables) if variables is not None else None, order)


def _ringref(ts):
    if ts.peek.kind == "ident" and ts.peek.text in RING_NAMES:
        return _ring_literal(ts)
    return ("name", ts.expect_kind("ident", "ring").text)


def _optional_ring(ts):
    """``ring :`` prefix when present."""
    t = ts.peek
    if t.kind == "ident" and t.text in RING_NAMES:
        r = _ring_literal(ts)
        ts.expect(":")
        return r
    nxt = ts.tokens[ts.pos + 1] if ts.pos + 1 < len(ts.tokens) else None
    if t.kind == "ident" and nxt is not None and nxt.text == ":":
        ts.advance()
        ts.advance()
        return ("name", t.text)
    return None


# pieces

def _expr(ts):
    return parse_expr(ts)


def _expr_list(ts, close):
    items = []
    while not ts.at(close):
        items.append(_expr(ts))
        if not ts.accept(","):
            break
    ts.expect(close)
    return items


def _ideal(ts):
    ts.expect("{")
    return _expr_list(ts, "}")


def _matrix(ts):
    ts.expect("[")
    rows = []
    while ts.at("["):
        ts.advance()
        rows.append(_expr_list(ts, "]"))
        if not ts.accept(","):
            break
    ts.expect("]")
    return rows


def _name(ts, what="name"):
    return ts.expect_kind("ident", what).text


def _int(ts, what="integer"):
    neg = ts.accept("-") is not None
    if not neg:
        ts.accept("+")
    k = int(ts.expect_kind("num", what).text)
    return -k if neg else k


def _keyword_int(ts, word, default=None):
    if ts.accept(word):
        return _int(ts, word)
    return default


def _presentation(ts):
    gens, rels = FpGroupPresentation._parse(ts)
    return {"generators": gens, "relators": rels}


# value forms

def _v_module(ts):
    R = _ringref(ts)
    ts.expect("gens")
    n = _int(ts, "generator count")
    rels = _matrix(ts) if ts.accept("rels") else []
    return {"ring": R, "gens": n, "rels": rels}


def _v_cyclic(ts):
    R = _ringref(ts)
    anns = []
    if ts.accept(":"):
        anns.append(_expr(ts))
        while ts.accept(","):
            anns.append(_expr(ts))
    return {"ring": R, "anns": anns}


def _v_free(ts):
    R = _ringref(ts)
    return {"ring": R, "rank": _int(ts, "rank")}


def _v_hom(ts):
    src = _name(ts, "source module")
    ts.expect("-")
    ts.expect(">")
    tgt = _name(ts, "target module")
    return {"source": src, "target": tgt, "matrix": _matrix(ts)}


def _v_complex(ts):
    ts.expect("[")
    names = []
    while not ts.at("]"):
        names.append(_name(ts, "differential"))
        if not ts.accept(","):
            break
    ts.expect("]")
    return {"differentials": names, "lo": _keyword_int(ts, "at", 0)}


def _v_group(ts):
    return _presentation(ts)


def _v_localize(ts):
    R = _ringref(ts)
    ts.expect("at")
    return {"ring": R, "gens": _ideal(ts)}


def _v_frac(ts):
    L = _name(ts, "localized ring")
    ts.expect(":")
    return {"ring": ("name", L), "expr": _expr(ts)}


def _v_poly(ts):
    R = _ringref(ts)
    ts.expect(":")
    return {"ring": R, "expr": _expr(ts)}


_VALUES = {
    "module": _v_module, "cyclic": _v_cyclic, "free": _v_free, "hom": _v_hom,
    "complex": _v_complex, "group": _v_group, "localize": _v_localize, "frac": _v_frac,
    "poly": _v_poly,
}


# commands

def _c_groebner(ts):
    return {"ring": _optional_ring(ts), "ideal": _ideal(ts)}


def _c_reduce(ts):
    R = _optional_ring(ts)
    f = _expr(ts)
    ts.expect("by")
    return {"ring": R, "expr": f, "ideal": _ideal(ts)}


def _c_member(ts):
    R = _optional_ring(ts)
    f = _expr(ts)
    ts.expect("in")
    return {"ring": R, "expr": f, "ideal": _ideal(ts)}


def _c_syzygies(ts):
    return {"ring": _optional_ring(ts), "ideal": _ideal(ts)}


def _c_flatcheck(ts):
    R = _ringref(ts)
    ts.expect(":")
    f = _expr(ts)
    ts.expect("over")
    ts.expect("{")
    split = []
    while not ts.at("}"):
        split.append(_name(ts, "variable"))
        if not ts.accept(","):
            break
    ts.expect("}")
    return {"ring": R, "expr": f, "split": split, "witness": _keyword_int(ts, "witness")}


def _c_resolve(ts):
    return {"module": _name(ts, "module"), "length": _keyword_int(ts, "length")}


def _c_tor(ts):
    return {"left": _name(ts, "module"), "right": _name(ts, "module"), "n": _int(ts, "degree")}


def _c_torles(ts):
    f = _name(ts, "hom")
    g = _name(ts, "hom")
    N = _name(ts, "module")
    return {"f": f, "g": g, "module": N, "length": _keyword_int(ts, "length", 2)}


def _c_tensor(ts):
    return {"left": _name(ts, "module"), "right": _name(ts, "module")}


def _c_hom_arg(ts):
    return {"hom": _name(ts, "hom")}


def _c_snf(ts):
    return {"ring": _optional_ring(ts), "matrix": _matrix(ts)}


def _c_abelianize(ts):
    if ts.at("<"):
        return {"presentation": _presentation(ts)}
    return {"group": _name(ts, "group")}


def _c_reduceword(ts):
    group = None
    nxt = ts.tokens[ts.pos + 1] if ts.pos + 1 < len(ts.tokens) else None
    if ts.peek.kind == "ident" and nxt is not None and nxt.text == ":":
        group = ts.advance().text
        ts.advance()
    start = ts.pos
    letters = []
    i = start
    while ts.tokens[i].kind != "eof" and ts.tokens[i].text != ";":
        if ts.tokens[i].kind == "ident" and ts.tokens[i].text not in letters:
            letters.append(ts.tokens[i].text)
        i += 1
    word = parse_word_tokens(ts, letters, stop=(";",))
    named = [(letters[abs(x) - 1], 1 if x > 0 else -1) for x in word]
    return {"group": group, "word": named}


def _c_cohomology(ts):
    return {"complex": _name(ts, "complex"), "degree": _int(ts, "degree")}


def _c_strickland(ts):
    return {"ring": _name(ts, "localized ring"), "samples": _keyword_int(ts, "samples", 20)}


_SETTINGS = ("order", "sign", "budget", "format", "seed")


def _c_set(ts):
    key = ts.peek.text
    if not ts.at(*_SETTINGS):
        ts.expected.update(repr(k) for k in _SETTINGS)
        ts.fail("expected a setting")
    ts.advance()
    if key == "order":
        if not ts.at(*ORDERS):
            ts.expected.update(repr(o) for o in ORDERS)
            ts.fail("expected a monomial order")
        value = ts.advance().text
    elif key == "format":
        if not ts.at("text", "json"):
            ts.expected.update(("'text'", "'json'"))
            ts.fail("expected an output format")
        value = ts.advance().text
    else:
        value = _int(ts, key)
        if key == "sign" and value not in (1, -1):
            raise ParseError("sign must be +1 or -1", ts.tokens[ts.pos - 1].line, ts.tokens[ts.pos - 1].col)
    return {"key": key, "value": value}


def _c_show(ts):
    if ts.peek.kind == "ident":
        return {"name": ts.advance().text}
    return {"name": None}


def _c_run(ts):
    t = ts.expect_kind("string", "file name in quotes")
    return {"path": t.text[1:-1]}


_COMMANDS = {
    "groebner": _c_groebner, "reduce": _c_reduce, "member": _c_member, "syzygies": _c_syzygies,
    "flatcheck": _c_flatcheck, "resolve": _c_resolve, "tor": _c_tor, "torles": _c_torles,
    "tensor": _c_tensor, "kernel": _c_hom_arg, "cokernel": _c_hom_arg, "image": _c_hom_arg,
    "snf": _c_snf, "abelianize": _c_abelianize, "reduceword": _c_reduceword,
    "cohomology": _c_cohomology, "strickland": _c_strickland, "set": _c_set, "show": _c_show,
    "run": _c_run,
}
