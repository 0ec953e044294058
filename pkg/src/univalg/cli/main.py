"""Entry point: run a script, a ``-e`` expression, or an interactive loop."""

import argparse
import sys

from ..syntax import ParseError
from .emit import emit
from .parser import parse
from .session import CliError, Session, execute


def _sign(text):
    if text not in ("+1", "1", "-1"):
        raise argparse.ArgumentTypeError("sign must be +1 or -1")
    return int(text)


def build_parser():
    p = argparse.ArgumentParser(prog="univalg", description="Constructive commutative and homological algebra.")
    p.add_argument("script", nargs="?", help="file of statements; read stdin when omitted")
    p.add_argument("-e", "--execute", action="append", default=[], metavar="STATEMENTS",
                   help="run the given statements (may repeat)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--gb-budget", type=int, default=None, metavar="N",
                   help="maximum number of S-pairs per Groebner computation")
    p.add_argument("--sign", type=_sign, default=1, help="sign convention for connecting maps (+1 or -1)")
    return p


def run_text(text, session, out, err):
    """Execute ``text`` statement by statement; returns ``(session, exit_code)``."""
    try:
        cmds = parse(text)
    except ParseError as e:
        _report(CliError("parse", e.message, e.line, e.col, e.expected), session, err)
        return session, 1
    for cmd in cmds:
        try:
            session, record = execute(cmd, session)
        except CliError as e:
            _report(e, session, err)
            return session, e.exit_code
        print(emit(record, session.config["format"]), file=out)
    return session, 0


def _report(e, session, err):
    print(emit(e, session.config["format"]), file=err)


def repl(session, inp, out, err):
    interactive = inp.isatty()
    code = 0
    while True:
        if interactive:
            print("univalg> ", end="", file=out, flush=True)
        line = inp.readline()
        if not line:
            return code
        session, c = run_text(line, session, out, err)
        if not interactive and c:
            return c


def main(argv=None, out=None, err=None, inp=None):
    out = out or sys.stdout
    err = err or sys.stderr
    inp = inp or sys.stdin
    args = build_parser().parse_args(argv)
    config = {"order": "degrevlex", "sign": args.sign, "budget": args.gb_budget,
              "format": args.format, "seed": args.seed}
    session = Session(config=config)
    if args.execute:
        for text in args.execute:
            session, code = run_text(text, session, out, err)
            if code:
                return code
        return 0
    if args.script:
        try:
            with open(args.script, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as e:
            _report(CliError("io", f"cannot read {args.script}: {e.strerror}"), session, err)
            return 1
        return run_text(text, session, out, err)[1]
    return repl(session, inp, out, err)


if __name__ == "__main__":
    sys.exit(main())
