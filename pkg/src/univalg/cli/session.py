"""Session state and command execution.

``execute`` never mutates its session: it returns a new Session together
with an Output record whose ``data`` is plain JSON and carries the engine's
certificate unchanged.
"""

import random
from dataclasses import dataclass, field, replace
from pathlib import Path

from ..derived_tor.flatness import FlatnessReport, hypersurface_flat_check
from ..derived_tor.resolution import Resolution, ResolutionError, free_resolution
from ..derived_tor.tor import TorLES, TorResult, tor_les
from ..fp_modules.modules import (HomError, ModuleHom, PresentedModule, cokernel, describe_module,
                                  image, kernel)
from ..fp_modules.tensor import tensor_product
from ..free_algebra.presentations import FpGroupPresentation, abelianization, describe_abelian
from ..free_algebra.words import reduce_word, render_word
from ..homology import Complex, ComplexError, complex_to_json
from ..localization import LocalFraction, LocalizedRing, strickland_verify
from ..poly_gb.groebner import GroebnerBasis, ideal_membership, reduce, syzygy_basis
from ..poly_gb.modgb import BudgetExceeded, pair_budget, set_pair_budget
from ..poly_gb.polynomial import Polynomial, PolynomialRing
from ..ring_core.matrix import Matrix
from ..ring_core.rings import GF, QQ, ZZ, CapabilityError, Ring
from ..ring_core.snf import smith_normal_form
from ..ringspec import element_from_tree
from ..syntax import ParseError
from .parser import parse

DEFAULT_CONFIG = {"order": "degrevlex", "sign": 1, "budget": None, "format": "text", "seed": 0}


class CliError(Exception):
    """A diagnostic with a stable code: parse, unknown-binding, type, budget, engine, io."""

    def __init__(self, code, message, line=None, col=None, expected=()):
        super().__init__(message)
        self.code = code
        self.message = message
        self.line = line
        self.col = col
        self.expected = tuple(expected)

    @property
    def exit_code(self):
        return 2 if self.code == "budget" else 1

    def to_json(self):
        out = {"error": self.code, "message": self.message}
        if self.line is not None:
            out["line"], out["col"] = self.line, self.col
        if self.expected:
            out["expected"] = list(self.expected)
        return out

    def __str__(self):
        where = f"{self.line}:{self.col}: " if self.line is not None else ""
        hint = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        return f"error[{self.code}] {where}{self.message}{hint}"


@dataclass(frozen=True)
class Session:
    bindings: dict = field(default_factory=dict)
    config: dict = field(default_factory=lambda: dict(DEFAULT_CONFIG))

    def bind(self, name, value):
        return replace(self, bindings={**self.bindings, name: value})

    def configure(self, key, value):
        return replace(self, config={**self.config, key: value})


@dataclass
class Output:
    kind: str
    text: str
    data: dict

    def to_json(self):
        return {"kind": self.kind, **self.data}


BINDABLE = (Ring, PresentedModule, ModuleHom, Complex, Resolution, TorResult, TorLES,
            FpGroupPresentation, LocalFraction, Polynomial, GroebnerBasis, FlatnessReport)

_KIND_NAMES = {
    Ring: "ring", PresentedModule: "module", ModuleHom: "hom", Complex: "complex",
    Resolution: "resolution", TorResult: "tor", TorLES: "torles", FpGroupPresentation: "group",
    LocalFraction: "fraction", Polynomial: "polynomial", GroebnerBasis: "groebner",
    FlatnessReport: "flatness",
}


def kind_of(value):
    for t, name in _KIND_NAMES.items():
        if isinstance(value, t):
            return name
    return type(value).__name__


# helpers

def _rows(R, M):
    return [[R.render(a) for a in r] for r in M.rows]


def _fmt_rows(rows):
    return "[" + ", ".join("[" + ", ".join(r) + "]" for r in rows) + "]"


def _get(session, name, types, what, cmd):
    if name not in session.bindings:
        raise CliError("unknown-binding", f"no binding named {name!r}", cmd.line, cmd.col)
    v = session.bindings[name]
    if not isinstance(v, types):
        raise CliError("type", f"{name!r} is a {kind_of(v)}, expected {what}", cmd.line, cmd.col)
    return v


def _tree_vars(tree, out):
    if tree[0] == "var":
        if tree[1] not in out:
            out.append(tree[1])
    elif tree[0] not in ("num",):
        for t in tree[1:]:
            if isinstance(t, tuple):
                _tree_vars(t, out)
    return out


def _ring(session, ref, cmd, trees=(), default=None):
    if ref is None:
        names = []
        for t in trees:
            _tree_vars(t, names)
        if not names:
            return default or QQ
        return PolynomialRing(QQ, sorted(names), session.config["order"])
    if ref[0] == "name":
        return _get(session, ref[1], Ring, "a ring", cmd)
    _, name, p, variables, order = ref
    try:
        base = ZZ if name == "ZZ" else QQ if name == "QQ" else GF(p)
    except ValueError as e:
        raise CliError("type", str(e), cmd.line, cmd.col)
    if variables is None:
        return base
    return PolynomialRing(base, list(variables), order or session.config["order"])


def _elem(R, tree, cmd):
    try:
        return element_from_tree(R, tree)
    except (ValueError, ZeroDivisionError, CapabilityError) as e:
        raise CliError("type", f"cannot read element of {R}: {e}", cmd.line, cmd.col)


def _matrix(R, rows, ncols, cmd):
    rows = [[_elem(R, t, cmd) for t in r] for r in rows]
    if any(len(r) != ncols for r in rows):
        raise CliError("type", f"every row must have {ncols} entries", cmd.line, cmd.col)
    return Matrix(R, rows, ncols) if rows else Matrix.zeros(R, 0, ncols)


# rendering of values

def module_data(M):
    R = M.ring
    return {"ring": str(R), "gens": M.ngens, "relations": _rows(R, M.relations),
            "structure": describe_module(M)}


def describe(value):
    """``(text, data)`` for any bindable value."""
    if isinstance(value, Ring):
        return str(value) if not isinstance(value, PolynomialRing) else repr(value), {"ring": repr(value)}
    if isinstance(value, PresentedModule):
        d = module_data(value)
        text = d["structure"]
        if value.ngens:
            text += f"\n  presentation: {value.ngens} gens, rels {_fmt_rows(d['relations'])}"
        return text, d
    if isinstance(value, ModuleHom):
        R = value.ring
        rows = _rows(R, value.matrix)
        d = {"source": module_data(value.source), "target": module_data(value.target), "matrix": rows}
        return (f"hom {describe_module(value.source)} -> {describe_module(value.target)}, "
                f"matrix {_fmt_rows(rows)}"), d
    if isinstance(value, Complex):
        d = complex_to_json(value)
        parts = [f"M_{i} = {describe_module(value.module(i))}" for i in value.degrees()]
        return "complex " + "; ".join(parts), d
    if isinstance(value, Resolution):
        R = value.ring
        mats = [_rows(R, D) for D in value.matrices()]
        d = {"ranks": value.ranks(), "differentials": mats, "truncated": value.truncated}
        lines = [f"ranks {value.ranks()}" + (" (truncated)" if value.truncated else "")]
        lines += [f"  d_{i + 1} = {_fmt_rows(m)}" for i, m in enumerate(mats)]
        return "\n".join(lines), d
    if isinstance(value, TorResult):
        return _tor_text(value)
    if isinstance(value, TorLES):
        return _les_text(value)
    if isinstance(value, FpGroupPresentation):
        return str(value), {"generators": list(value.generators),
                            "relators": [value.render(r) for r in value.relators]}
    if isinstance(value, LocalFraction):
        return str(value), {"fraction": str(value)}
    if isinstance(value, Polynomial):
        return str(value), {"ring": repr(value.ring), "polynomial": str(value)}
    if isinstance(value, GroebnerBasis):
        return _groebner_text(value)
    if isinstance(value, FlatnessReport):
        return _flat_text(value)
    return repr(value), {"value": repr(value)}


def _tor_text(t):
    R = t.M.ring
    d = {"degree": t.n, "value": t.describe(), "presentation": module_data(t.value),
         "resolution_ranks": t.resolution.ranks(),
         "provenance": f"h_{t.n} of (free resolution of M) tensor N"}
    text = (f"Tor_{t.n}(M, N) = {t.describe()}\n"
            f"  via h_{t.n} of F (x) N, F of ranks {t.resolution.ranks()} over {R}")
    return text, d


def _les_text(les):
    L = les.sequence
    nodes = []
    for k in range(L.hi, L.lo - 1, -1):
        i, r = divmod(k, 3)
        label = {2: "A", 1: "B", 0: "C"}[r]
        nodes.append({"node": k, "label": f"Tor_{i}({label}, N)", "value": describe_module(L.module(k)),
                      "exact": les.exactness[k]})
    d = {"nodes": nodes, "exact": all(les.exactness.values()), "valid_through": les.valid_through}
    lines = [f"  {n['label']} = {n['value']}" + ("" if n["exact"] else "   [not exact]") for n in nodes]
    head = "long exact Tor sequence: " + ("exact" if d["exact"] else "NOT exact")
    if les.valid_through is not None:
        head += f" (Tor values valid through degree {les.valid_through})"
    return "\n".join([head] + lines), d


def _groebner_text(G):
    R = G.ring
    basis = [str(g) for g in G.basis]
    T = _rows(R, G.transform)
    d = {"ring": repr(R), "basis": basis,
         "certificate": {"transform": T, "criterion": G.check(), "pairs_processed": G.pairs_processed}}
    return "basis: {" + ", ".join(basis) + "}\n  transform: " + _fmt_rows(T), d


def _flat_text(rep):
    d = rep.to_json()
    lines = [f"{rep.verdict.upper()}: {rep.ring}/({rep.polynomial}) over {rep.coefficient_ring}",
             f"  coefficients: {', '.join(rep.coefficients)}"]
    cert = d.get("certificate", {})
    if "combination" in cert:
        terms = " + ".join(f"({h})*({c})" for h, c in zip(cert["combination"], rep.coefficients))
        lines.append(f"  certificate: {terms} = 1")
    elif "groebner_basis" in cert:
        lines.append(f"  certificate: coefficient ideal has Groebner basis {{{', '.join(cert['groebner_basis'])}}}, "
                     "which does not contain 1")
    elif "gcd" in cert:
        lines.append(f"  certificate: coefficient ideal is ({cert['gcd']}), not the unit ideal")
    if rep.witness is not None:
        w = rep.witness
        lines.append(f"  witness: Tor_1({rep.coefficient_ring}/({', '.join(w['ideal'])}), model up to degree "
                     f"{w['degree']}) = {w['tor1']}")
    d["verified"] = rep.verify()
    return "\n".join(lines), d


# execution

def execute(cmd, session):
    """Run one command; returns ``(new_session, Output)``."""
    previous = pair_budget()
    budget = session.config.get("budget")
    set_pair_budget(budget)
    try:
        return _dispatch(cmd, session)
    except BudgetExceeded as e:
        raise CliError("budget", f"Groebner pair budget exceeded: {e}", cmd.line, cmd.col)
    except (HomError, ComplexError, ResolutionError, CapabilityError) as e:
        raise CliError("engine", str(e), cmd.line, cmd.col)
    except (ValueError, ZeroDivisionError) as e:
        if isinstance(e, (CliError, ParseError)):
            raise
        raise CliError("engine", str(e), cmd.line, cmd.col)
    finally:
        set_pair_budget(previous)


def execute_text(text, session=None):
    """Parse and run every statement; returns ``(session, [Output])``."""
    session = session or Session()
    try:
        cmds = parse(text)
    except ParseError as e:
        raise CliError("parse", e.message, e.line, e.col, e.expected)
    outs = []
    for cmd in cmds:
        session, out = execute(cmd, session)
        outs.append(out)
    return session, outs


def _dispatch(cmd, session):
    if cmd.verb == "let":
        value, _ = _evaluate(cmd.args["value"], session)
        if not isinstance(value, BINDABLE):
            raise CliError("type", f"cannot bind a {kind_of(value)}", cmd.line, cmd.col)
        name = cmd.args["name"]
        text, data = describe(value)
        return session.bind(name, value), Output("let", f"{name} = {text}",
                                                 {"name": name, "type": kind_of(value), "value": data})
    if cmd.verb == "set":
        key, value = cmd.args["key"], cmd.args["value"]
        return session.configure(key, value), Output("set", f"{key} = {value}", {"key": key, "value": value})
    if cmd.verb == "show":
        return session, _show(session, cmd)
    if cmd.verb == "run":
        return _run(session, cmd)
    _, out = _evaluate(cmd, session)
    return session, out


def _evaluate(cmd, session):
    """``(value, Output)`` for a value form or a command."""
    handler = _HANDLERS.get(cmd.verb)
    if handler is None:
        raise CliError("parse", f"unknown command {cmd.verb!r}", cmd.line, cmd.col)
    value, kind, text, data = handler(cmd, session)
    return value, Output(kind, text, data)


def _as_value(kind):
    def wrap(value):
        text, data = describe(value)
        return value, kind, text, data
    return wrap


def _h_ring(cmd, s):
    return _as_value("ring")(_ring(s, cmd.args["ring"], cmd))


def _h_alias(cmd, s):
    v = _get(s, cmd.args["name"], BINDABLE, "a value", cmd)
    return _as_value(kind_of(v))(v)


def _h_module(cmd, s):
    R = _ring(s, cmd.args["ring"], cmd)
    n = cmd.args["gens"]
    if n < 0:
        raise CliError("type", "generator count must be non-negative", cmd.line, cmd.col)
    return _as_value("module")(PresentedModule(R, n, _matrix(R, cmd.args["rels"], n, cmd).rows))


def _h_cyclic(cmd, s):
    R = _ring(s, cmd.args["ring"], cmd)
    return _as_value("module")(PresentedModule.cyclic(R, *[_elem(R, t, cmd) for t in cmd.args["anns"]]))


def _h_free(cmd, s):
    R = _ring(s, cmd.args["ring"], cmd)
    return _as_value("module")(PresentedModule.free(R, cmd.args["rank"]))


def _h_hom(cmd, s):
    M = _get(s, cmd.args["source"], PresentedModule, "a module", cmd)
    N = _get(s, cmd.args["target"], PresentedModule, "a module", cmd)
    if M.ring != N.ring:
        raise CliError("type", "source and target live over different rings", cmd.line, cmd.col)
    A = _matrix(M.ring, cmd.args["matrix"], N.ngens, cmd)
    if A.nrows != M.ngens:
        raise CliError("type", f"matrix needs one row per generator of the source ({M.ngens})", cmd.line, cmd.col)
    f = ModuleHom(M, N, A)
    text, data = describe(f)
    return f, "hom", text, {**data, "certificate": {"relation_lifts": _cert_rows(f)}}


def _cert_rows(f):
    cert = getattr(f, "certificate", None)
    if cert is None:
        return None
    R = f.ring
    return [[R.render(a) for a in row] for row in cert]


def _h_complex(cmd, s):
    ds = [_get(s, n, ModuleHom, "a hom", cmd) for n in cmd.args["differentials"]]
    if not ds:
        raise CliError("type", "a complex needs at least one differential", cmd.line, cmd.col)
    lo = cmd.args["lo"]
    modules = [ds[0].target] + [d.source for d in ds]
    for k in range(1, len(ds)):
        if ds[k].target is not ds[k - 1].source:
            raise CliError("type", f"differential {k + 1} does not land in the source of differential {k}",
                           cmd.line, cmd.col)
    C = Complex(modules, {lo + 1 + k: d for k, d in enumerate(ds)}, lo=lo)
    return _as_value("complex")(C)


def _h_group(cmd, s):
    return _as_value("group")(FpGroupPresentation(cmd.args["generators"], cmd.args["relators"]))


def _h_localize(cmd, s):
    R = _ring(s, cmd.args["ring"], cmd)
    gens = [_elem(R, t, cmd) for t in cmd.args["gens"]]
    return _as_value("ring")(LocalizedRing(R, gens))


def _h_frac(cmd, s):
    L = _get(s, cmd.args["ring"][1], LocalizedRing, "a localized ring", cmd)
    return _as_value("fraction")(_elem(L, cmd.args["expr"], cmd))


def _h_poly(cmd, s):
    R = _ring(s, cmd.args["ring"], cmd, [cmd.args["expr"]])
    return _as_value("polynomial")(_elem(R, cmd.args["expr"], cmd))


def _poly_ring(cmd, s, trees):
    R = _ring(s, cmd.args["ring"], cmd, trees)
    if not isinstance(R, PolynomialRing):
        raise CliError("type", f"{R} is not a polynomial ring", cmd.line, cmd.col)
    return R


def _h_groebner(cmd, s):
    trees = cmd.args["ideal"]
    R = _poly_ring(cmd, s, trees)
    G = GroebnerBasis([_elem(R, t, cmd) for t in trees], R)
    return _as_value("groebner")(G)


def _h_reduce(cmd, s):
    trees = [cmd.args["expr"]] + cmd.args["ideal"]
    R = _poly_ring(cmd, s, trees)
    f = _elem(R, cmd.args["expr"], cmd)
    gens = [_elem(R, t, cmd) for t in cmd.args["ideal"]]
    r, q = reduce(f, gens)
    data = {"ring": repr(R), "remainder": str(r), "certificate": {"quotients": [str(x) for x in q]}}
    text = f"remainder: {r}\n  quotients: [{', '.join(map(str, q))}]"
    return r, "reduce", text, data


def _h_member(cmd, s):
    trees = [cmd.args["expr"]] + cmd.args["ideal"]
    R = _ring(s, cmd.args["ring"], cmd, trees)
    f = _elem(R, cmd.args["expr"], cmd)
    gens = [_elem(R, t, cmd) for t in cmd.args["ideal"]]
    h = ideal_membership(f, gens, R)
    render = R.render
    if h is not None:
        combo = [render(x) for x in h]
        text = "member: yes\n  certificate: " + " + ".join(
            f"({a})*({render(g)})" for a, g in zip(combo, gens)) + f" = {render(f)}"
        return True, "member", text, {"member": True, "certificate": {"combination": combo}}
    data = {"member": False}
    text = "member: no"
    if isinstance(R, PolynomialRing) and R.is_groebner:
        G = GroebnerBasis(gens, R)
        nf = G.normal_form(f)
        data["certificate"] = {"groebner_basis": [str(g) for g in G.basis], "normal_form": str(nf)}
        text += f"\n  certificate: normal form {nf} modulo Groebner basis {{{', '.join(map(str, G.basis))}}}"
    return False, "member", text, data


def _h_syzygies(cmd, s):
    trees = cmd.args["ideal"]
    R = _ring(s, cmd.args["ring"], cmd, trees, default=ZZ)
    gens = [_elem(R, t, cmd) for t in trees]
    S = syzygy_basis(gens, R)
    rows = _rows(R, S)
    return S, "syzygies", "syzygies: " + (_fmt_rows(rows) if rows else "none"), {"syzygies": rows}


def _h_flatcheck(cmd, s):
    C = _ring(s, cmd.args["ring"], cmd)
    split = cmd.args["split"]
    if isinstance(C, PolynomialRing):
        clash = [v for v in split if v in C.vars]
        if clash:
            raise CliError("type", f"split variables {clash} already belong to {C}", cmd.line, cmd.col)
        S = PolynomialRing(C.base, list(C.vars) + list(split), C.order)
    else:
        S = PolynomialRing(C, list(split), s.config["order"])
    f = _elem(S, cmd.args["expr"], cmd)
    rep = hypersurface_flat_check(f, split, witness_degree=cmd.args["witness"])
    return _as_value("flatness")(rep)


def _h_resolve(cmd, s):
    M = _get(s, cmd.args["module"], PresentedModule, "a module", cmd)
    return _as_value("resolution")(free_resolution(M, cmd.args["length"]))


def _h_tor(cmd, s):
    M = _get(s, cmd.args["left"], PresentedModule, "a module", cmd)
    N = _get(s, cmd.args["right"], PresentedModule, "a module", cmd)
    if M.ring != N.ring:
        raise CliError("type", "modules live over different rings", cmd.line, cmd.col)
    if cmd.args["n"] < 0:
        raise CliError("type", "Tor degree must be non-negative", cmd.line, cmd.col)
    return _as_value("tor")(TorResult(M, N, cmd.args["n"]))


def _h_torles(cmd, s):
    f = _get(s, cmd.args["f"], ModuleHom, "a hom", cmd)
    g = _get(s, cmd.args["g"], ModuleHom, "a hom", cmd)
    N = _get(s, cmd.args["module"], PresentedModule, "a module", cmd)
    if g.source is not f.target:
        raise CliError("type", "g must start where f ends", cmd.line, cmd.col)
    if not (f.is_injective() and g.is_surjective() and (g * f).is_zero()):
        raise CliError("engine", "0 -> A -> B -> C -> 0 is not short exact", cmd.line, cmd.col)
    les = tor_les(f, g, N, length=cmd.args["length"], sign=s.config["sign"])
    return _as_value("torles")(les)


def _h_tensor(cmd, s):
    M = _get(s, cmd.args["left"], PresentedModule, "a module", cmd)
    N = _get(s, cmd.args["right"], PresentedModule, "a module", cmd)
    T = tensor_product(M, N)
    T = getattr(T, "module", T)
    return _as_value("module")(T)


def _h_kernel(cmd, s):
    f = _get(s, cmd.args["hom"], ModuleHom, "a hom", cmd)
    K, inc = kernel(f)
    text, data = describe(K)
    rows = _rows(f.ring, inc.matrix)
    return K, "kernel", text + f"\n  inclusion: {_fmt_rows(rows)}", {**data, "certificate": {"inclusion": rows}}


def _h_cokernel(cmd, s):
    f = _get(s, cmd.args["hom"], ModuleHom, "a hom", cmd)
    C, proj = cokernel(f)
    text, data = describe(C)
    rows = _rows(f.ring, proj.matrix)
    return C, "cokernel", text + f"\n  projection: {_fmt_rows(rows)}", {**data, "certificate": {"projection": rows}}


def _h_image(cmd, s):
    f = _get(s, cmd.args["hom"], ModuleHom, "a hom", cmd)
    I, inc, core = image(f)
    text, data = describe(I)
    rows = _rows(f.ring, inc.matrix)
    return I, "image", text + f"\n  inclusion: {_fmt_rows(rows)}", {**data, "certificate": {"inclusion": rows}}


def _h_snf(cmd, s):
    R = _ring(s, cmd.args["ring"], cmd, default=ZZ) if cmd.args["ring"] else ZZ
    rows = cmd.args["matrix"]
    ncols = len(rows[0]) if rows else 0
    A = _matrix(R, rows, ncols, cmd)
    F = smith_normal_form(A)
    M = PresentedModule(R, ncols, A.rows)
    factors = [R.render(d) for d in F.invariant_factors]
    data = {"invariant_factors": factors, "cokernel": describe_module(M),
            "certificate": {"U": _rows(R, F.U), "V": _rows(R, F.V), "D": _rows(R, F.D)}}
    text = (f"invariant factors: [{', '.join(factors)}]\n  cokernel: {data['cokernel']}\n"
            f"  U = {_fmt_rows(data['certificate']['U'])}, V = {_fmt_rows(data['certificate']['V'])}")
    return F, "snf", text, data


def _h_abelianize(cmd, s):
    if cmd.args.get("group"):
        P = _get(s, cmd.args["group"], FpGroupPresentation, "a group", cmd)
    else:
        P = FpGroupPresentation(**cmd.args["presentation"])
    A = abelianization(P)
    text = describe_abelian(A.torsion, A.rank)
    rows = _rows(ZZ, P.relation_matrix())
    return A, "abelianize", text, {"torsion": list(A.torsion), "rank": A.rank, "structure": text,
                                   "certificate": {"exponent_sums": rows}}


def _h_reduceword(cmd, s):
    named = cmd.args["word"]
    if cmd.args["group"]:
        P = _get(s, cmd.args["group"], FpGroupPresentation, "a group", cmd)
        letters = list(P.generators)
    else:
        letters = []
        for name, _ in named:
            if name not in letters:
                letters.append(name)
    for name, _ in named:
        if name not in letters:
            raise CliError("type", f"{name!r} is not a generator", cmd.line, cmd.col)
    w = tuple((letters.index(n) + 1) * e for n, e in named)
    r = reduce_word(w)
    text = render_word(r, letters)
    return r, "reduceword", text, {"input": render_word(w, letters), "reduced": text, "length": len(r)}


def _h_cohomology(cmd, s):
    C = _get(s, cmd.args["complex"], Complex, "a complex", cmd)
    H = C.cohomology(cmd.args["degree"])
    text, data = describe(H.module)
    rows = _rows(C.ring, H.inclusion.matrix)
    return H.module, "cohomology", f"h_{cmd.args['degree']} = {text}", {
        **data, "degree": cmd.args["degree"], "certificate": {"cycles": rows}}


def _random_element(R, rng):
    if isinstance(R, PolynomialRing):
        x = R.zero
        for _ in range(rng.randint(1, 3)):
            e = [rng.randint(0, 2) for _ in R.vars]
            m = R.one
            for v, k in zip(R.gens(), e):
                m = m * v ** k
            x = x + m * R(rng.randint(-5, 5))
        return x
    return R(rng.randint(-20, 20))


def _h_strickland(cmd, s):
    L = _get(s, cmd.args["ring"], LocalizedRing, "a localized ring", cmd)
    rng = random.Random(s.config["seed"])
    sample = []
    for _ in range(cmd.args["samples"]):
        r = _random_element(L.base, rng)
        exps = [rng.randint(0, 3) for _ in L.S.generators]
        sample.append(L.fraction(r, exps))
        sample.append(r)
    rep = strickland_verify(L, sample)
    text = (f"Strickland clauses on {len(sample)} samples (seed {s.config['seed']}): "
            f"units={rep.units} fractions={rep.decomposition} kernel={rep.kernel}")
    return rep, "strickland", text, {"units": rep.units, "decomposition": rep.decomposition,
                                     "kernel": rep.kernel, "passed": rep.passed,
                                     "violations": [list(v) for v in rep.violations]}


_HANDLERS = {
    "ring": _h_ring, "alias": _h_alias, "module": _h_module, "cyclic": _h_cyclic, "free": _h_free,
    "hom": _h_hom, "complex": _h_complex, "group": _h_group, "localize": _h_localize,
    "frac": _h_frac, "poly": _h_poly, "groebner": _h_groebner, "reduce": _h_reduce,
    "member": _h_member, "syzygies": _h_syzygies, "flatcheck": _h_flatcheck, "resolve": _h_resolve,
    "tor": _h_tor, "torles": _h_torles, "tensor": _h_tensor, "kernel": _h_kernel,
    "cokernel": _h_cokernel, "image": _h_image, "snf": _h_snf, "abelianize": _h_abelianize,
    "reduceword": _h_reduceword, "cohomology": _h_cohomology, "strickland": _h_strickland,
}


def _show(session, cmd):
    name = cmd.args["name"]
    if name is None:
        items = {k: kind_of(v) for k, v in session.bindings.items()}
        lines = [f"{k}: {t}" for k, t in items.items()]
        lines.append("config: " + ", ".join(f"{k}={v}" for k, v in session.config.items()))
        return Output("show", "\n".join(lines), {"bindings": items, "config": dict(session.config)})
    v = _get(session, name, BINDABLE, "a value", cmd)
    text, data = describe(v)
    return Output("show", f"{name} = {text}", {"name": name, "type": kind_of(v), "value": data})


def _run(session, cmd):
    path = Path(cmd.args["path"])
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise CliError("io", f"cannot read {path}: {e.strerror}", cmd.line, cmd.col)
    session, outs = execute_text(text, session)
    return session, Output("run", "\n".join(o.text for o in outs),
                           {"path": str(path), "outputs": [o.to_json() for o in outs]})
