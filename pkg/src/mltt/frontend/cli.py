"""Command-line driver.

    mltt check FILE
    mltt check -e EXPR -t TYPE
    mltt infer -e EXPR
    mltt nf -e EXPR [-t TYPE]
    mltt conv -e EXPR -e EXPR -t TYPE

Global flags: ``--fuel N``, ``--json``, ``--defs FILE`` (definitions in scope
for ``-e`` expressions). Exit codes: 0 ok, 1 type error, 2 parse error,
3 out of fuel, 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
import threading
from dataclasses import dataclass, field
from pathlib import Path

from .. import checker, conversion, normalizer
from ..errors import DEFAULT_FUEL, Fuel, IllFormed, KernelError, OutOfFuel, TypeCheckError
from ..syntax import Term, Univ
from .diagnostics import Diagnostic, FrontendError, Span
from .parser import SurfaceTerm, parse_file, parse_term
from .printer import print_term
from .resolve import resolve, subterm_at


@dataclass
class Source:
    text: str
    origin: str


@dataclass
class Session:
    fuel: Fuel
    defs: dict[str, Term] = field(default_factory=dict)
    types: dict[str, Term] = field(default_factory=dict)

    def kernel(self, surface: SurfaceTerm, fn, *args):
        """Run a kernel call whose subject is `surface`, mapping failures to diagnostics."""
        try:
            return fn(*args, self.fuel)
        except TypeCheckError as err:
            span = subterm_at(surface, err.path).span
            raise FrontendError(Diagnostic("type", err.message, span)) from err
        except OutOfFuel as err:
            raise FrontendError(Diagnostic(
                "fuel", f"out of fuel after {self.fuel.spent} steps", surface.span)) from err
        except IllFormed as err:
            raise FrontendError(Diagnostic("internal", str(err), surface.span)) from err
        except RecursionError as err:
            raise FrontendError(Diagnostic(
                "internal", "recursion limit exceeded", surface.span)) from err

    def resolve(self, surface: SurfaceTerm) -> Term:
        return resolve(surface, (), self.defs)

    def load(self, text: str) -> list[tuple[str, str]]:
        """Check every definition of a file in order; return (name, type text) pairs."""
        checked = []
        for d in parse_file(text):
            ty = self.resolve(d.ty)
            self.kernel(d.ty, checker.wf_ty, (), ty)
            body = self.resolve(d.body)
            self.kernel(d.body, checker.check, (), body, ty)
            self.defs[d.name] = body
            self.types[d.name] = ty
            checked.append((d.name, text[d.ty.span.start:d.ty.span.end]))
        return checked

    def type_expr(self, text: str) -> tuple[SurfaceTerm, Term]:
        s = parse_term(text)
        ty = self.resolve(s)
        self.kernel(s, checker.wf_ty, (), ty)
        return s, ty

    def term_expr(self, text: str, ty: Term | None) -> tuple[SurfaceTerm, Term, Term]:
        s = parse_term(text)
        t = self.resolve(s)
        if ty is None:
            ty = self.kernel(s, checker.infer, (), t)
        else:
            self.kernel(s, checker.check, (), t, ty)
        return s, t, ty


def _oracle_fuel(session: Session) -> Fuel:
    return Fuel(session.fuel.remaining * (normalizer.ORACLE_FUEL // DEFAULT_FUEL))


def cmd_check(session: Session, args, sources: list[Source]) -> list[str]:
    if args.file:
        text = Path(args.file).read_text(encoding="utf-8")
        sources.append(Source(text, args.file))
        return [f"{name} : {ty}" for name, ty in session.load(text)]
    if not args.expr or len(args.expr) != 1 or not args.type:
        raise FrontendError(Diagnostic("parse", "check needs FILE or -e EXPR -t TYPE", Span(0, 0)))
    sources.append(Source(args.type, "<type>"))
    _, ty = session.type_expr(args.type)
    sources.append(Source(args.expr[0], "<expr>"))
    session.term_expr(args.expr[0], ty)
    return ["ok"]


def cmd_infer(session: Session, args, sources: list[Source]) -> list[str]:
    expr = _single_expr(args, "infer")
    sources.append(Source(expr, "<expr>"))
    _, _, ty = session.term_expr(expr, None)
    return [print_term(ty)]


def cmd_nf(session: Session, args, sources: list[Source]) -> list[str]:
    expr = _single_expr(args, "nf")
    ty = None
    if args.type:
        sources.append(Source(args.type, "<type>"))
        _, ty = session.type_expr(args.type)
    sources.append(Source(expr, "<expr>"))
    try:
        s, t, ty = session.term_expr(expr, ty)
    except FrontendError as err:
        # large types (Type, Nat -> Type, ...) have no type but still normalize
        if args.type or err.diagnostic.kind != "type":
            raise
        s = parse_term(expr)
        t = session.resolve(s)
        try:
            session.kernel(s, checker.wf_ty, (), t)
        except FrontendError:
            raise err from None
        return [print_term(session.kernel(s, normalizer.nf_ty, (), t))]
    fuel = _oracle_fuel(session)
    if isinstance(ty, Univ):
        nf = Session(fuel).kernel(s, normalizer.nf_ty, (), t)
    else:
        nf = Session(fuel).kernel(s, normalizer.nf_tm, (), t, ty)
    return [print_term(nf)]


def cmd_conv(session: Session, args, sources: list[Source]) -> list[str]:
    if not args.expr or len(args.expr) != 2 or not args.type:
        raise FrontendError(Diagnostic("parse", "conv needs -e EXPR -e EXPR -t TYPE", Span(0, 0)))
    sources.append(Source(args.type, "<type>"))
    _, ty = session.type_expr(args.type)
    terms = []
    for i, expr in enumerate(args.expr):
        sources.append(Source(expr, f"<expr {i + 1}>"))
        _, t, _ = session.term_expr(expr, ty)
        terms.append(t)
    s = parse_term(args.expr[1])
    session.kernel(s, conversion.conv_tm, (), terms[0], terms[1], ty)
    return ["convertible"]


def _single_expr(args, command: str) -> str:
    if not args.expr or len(args.expr) != 1:
        raise FrontendError(Diagnostic("parse", f"{command} needs exactly one -e EXPR", Span(0, 0)))
    return args.expr[0]


COMMANDS = {"check": cmd_check, "infer": cmd_infer, "nf": cmd_nf, "conv": cmd_conv}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fuel", type=int, default=argparse.SUPPRESS,
                        help=f"step budget (default {DEFAULT_FUEL})")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output and diagnostics")
    common.add_argument("--defs", metavar="FILE", default=argparse.SUPPRESS,
                        help="definitions in scope for -e expressions")
    parser = argparse.ArgumentParser(prog="mltt", parents=[common],
                                     description="Type checker for Martin-Löf type theory.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "check":
            p.add_argument("file", nargs="?")
        p.add_argument("-e", dest="expr", action="append", metavar="EXPR")
        if name != "infer":
            p.add_argument("-t", dest="type", metavar="TYPE")
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    session = Session(Fuel(getattr(args, "fuel", DEFAULT_FUEL)))
    sources: list[Source] = []
    try:
        defs_file = getattr(args, "defs", None)
        if defs_file:
            text = Path(defs_file).read_text(encoding="utf-8")
            sources.append(Source(text, defs_file))
            session.load(text)
        lines = COMMANDS[args.command](session, args, sources)
    except FrontendError as err:
        diag = err.diagnostic
        if as_json:
            print(diag.to_json(), file=stderr)
        else:
            src = sources[-1] if sources else Source("", "<input>")
            print(diag.render(src.text, src.origin), file=stderr)
        return diag.exit_code
    except KernelError as err:  # only reachable through a kernel call made outside Session.kernel
        diag = Diagnostic("internal", str(err), Span(0, 0))
        print(diag.to_json() if as_json else diag.message, file=stderr)
        return diag.exit_code
    if as_json:
        print(json.dumps({"ok": True, "output": lines}), file=stdout)
    else:
        for line in lines:
            print(line, file=stdout)
    return 0


def main(argv: list[str] | None = None) -> None:
    # deep terms recurse deeply; run on a thread with a large stack
    sys.setrecursionlimit(100_000)
    threading.stack_size(512 * 1024 * 1024)
    result = [4]

    def work():
        try:
            result[0] = run(argv)
        except SystemExit as exc:  # argparse usage errors
            result[0] = exc.code if isinstance(exc.code, int) else 2

    worker = threading.Thread(target=work)
    worker.start()
    worker.join()
    sys.exit(result[0])
