"""Surface syntax: tokenizer, named syntax tree with spans, recursive-descent parser.

    term ::= ident | Type | Nat | Empty | zero | NUM | succ term
           | (x : A) -> B | A -> B | (x : A) ** B | A ** B
           | \\(x : A) => t | t t | fst t | snd t
           | pair(A, x. B, a, b) | natrec(x. P, hz, hs, n)
           | Id A x y | refl A x | idrec(A, a, y e. P, hr, b, p)
           | exfalso(x. P, e) | ( term )
    file ::= { def ident : term := term }

Application binds tightest and associates to the left; ``**`` binds tighter
than ``->``; both associate to the right. Binder forms extend as far right as
possible. Binder groups may be chained, as in
``\\(x : A) (y : B) => t`` or ``(x y : A) -> B``. ``--`` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .diagnostics import Diagnostic, FrontendError, Span

KEYWORDS = frozenset({
    "Type", "Nat", "Empty", "zero", "succ", "pair", "fst", "snd", "natrec",
    "Id", "refl", "idrec", "exfalso", "def",
})

_TOKEN = re.compile(r"""
    (?P<ws>\s+|--[^\n]*)
  | (?P<sym>->|\*\*|=>|:=|[()\\,.:])
  | (?P<num>[0-9]+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_']*)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str  # sym | num | ident | kw | eof
    text: str
    span: Span


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FrontendError(Diagnostic("parse", f"unexpected character {text[pos]!r}",
                                           Span(pos, pos + 1)))
        kind = m.lastgroup
        if kind != "ws":
            if kind == "ident" and m.group() in KEYWORDS:
                kind = "kw"
            tokens.append(Token(kind, m.group(), Span(m.start(), m.end())))
        pos = m.end()
    tokens.append(Token("eof", "", Span(len(text), len(text))))
    return tokens


@dataclass
class SurfaceTerm:
    """Named mirror of a core term.

    `kind` is a core constructor name, or "Var"/"Num". `args` are in core field
    order and `binders[i]` names the variables bound in `args[i]`.
    """

    kind: str
    span: Span
    args: tuple[SurfaceTerm, ...] = ()
    binders: tuple[tuple[str, ...], ...] = ()
    name: str | None = None
    value: int | None = None

    def __post_init__(self):
        if not self.binders:
            self.binders = tuple(() for _ in self.args)


@dataclass
class Definition:
    name: str
    ty: SurfaceTerm
    body: SurfaceTerm
    span: Span = field(default_factory=lambda: Span(0, 0))


_NULLARY = {"Type": "Univ", "Nat": "Nat", "Empty": "Empty", "zero": "Zero"}
_PREFIX = {"succ": ("Succ", 1), "fst": ("Fst", 1), "snd": ("Snd", 1),
           "Id": ("Id", 3), "refl": ("Refl", 2)}


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    # -- token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def peek(self, offset: int = 1) -> Token:
        return self.tokens[min(self.pos + offset, len(self.tokens) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("sym", "kw") and self.tok.text == text

    def error(self, message: str, span: Span | None = None):
        return FrontendError(Diagnostic("parse", message, span or self.tok.span))

    def expect(self, text: str) -> Token:
        if not self.at(text):
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        tok = self.tok
        self.pos += 1
        return tok

    def ident(self) -> Token:
        if self.tok.kind != "ident":
            found = self.tok.text or "end of input"
            raise self.error(f"expected an identifier, found {found!r}")
        tok = self.tok
        self.pos += 1
        return tok

    # -- grammar

    def file(self) -> list[Definition]:
        defs = []
        while self.tok.kind != "eof":
            start = self.expect("def").span
            name = self.ident().text
            self.expect(":")
            ty = self.term()
            self.expect(":=")
            body = self.term()
            defs.append(Definition(name, ty, body, start + body.span))
        return defs

    def eof(self):
        if self.tok.kind != "eof":
            raise self.error(f"unexpected {self.tok.text!r}")

    def _binder_group_ahead(self) -> bool:
        if not self.at("("):
            return False
        i = 1
        while self.peek(i).kind == "ident":
            i += 1
        return i > 1 and self.peek(i).kind == "sym" and self.peek(i).text == ":"

    def binder_groups(self) -> list[tuple[str, SurfaceTerm, Span]]:
        groups = []
        while self._binder_group_ahead():
            open_ = self.expect("(").span
            names = []
            while self.tok.kind == "ident":
                names.append(self.ident().text)
            self.expect(":")
            ty = self.term()
            close = self.expect(")").span
            groups.extend((n, ty, open_ + close) for n in names)
        return groups

    def term(self) -> SurfaceTerm:
        start = self.tok.span
        if self.at("\\"):
            self.pos += 1
            groups = self.binder_groups()
            if not groups:
                raise self.error("expected a binder '(x : A)' after '\\'")
            self.expect("=>")
            return self._close_binders("Lam", groups, self.term(), start)
        if self._binder_group_ahead():
            groups = self.binder_groups()
            if self.at("->"):
                kind = "Pi"
            elif self.at("**"):
                kind = "Sigma"
            else:
                raise self.error("expected '->' or '**' after a binder")
            self.pos += 1
            return self._close_binders(kind, groups, self.term(), start)
        left = self.product()
        if self.at("->"):
            self.pos += 1
            right = self.term()
            return SurfaceTerm("Pi", left.span + right.span, (left, right), ((), ("_",)))
        return left

    def product(self) -> SurfaceTerm:
        left = self.app()
        if self.at("**"):
            self.pos += 1
            right = self.product()
            return SurfaceTerm("Sigma", left.span + right.span, (left, right), ((), ("_",)))
        return left

    def _close_binders(self, kind, groups, body, start):
        for name, ty, _ in reversed(groups):
            body = SurfaceTerm(kind, start + body.span, (ty, body), ((), (name,)))
        return body

    def _starts_arg(self) -> bool:
        tok = self.tok
        if tok.kind in ("ident", "num"):
            return True
        if tok.kind == "kw":
            return tok.text != "def"
        return tok.kind == "sym" and tok.text == "(" and not self._binder_group_ahead()

    def app(self) -> SurfaceTerm:
        head = self.prefix()
        while self._starts_arg():
            arg = self.prefix()
            head = SurfaceTerm("App", head.span + arg.span, (head, arg))
        return head

    def prefix(self) -> SurfaceTerm:
        tok = self.tok
        if tok.kind == "kw" and tok.text in _PREFIX:
            kind, arity = _PREFIX[tok.text]
            self.pos += 1
            args = []
            for _ in range(arity):
                if not self._starts_arg():
                    raise self.error(f"{tok.text!r} expects {arity} argument(s)")
                args.append(self.prefix())
            return SurfaceTerm(kind, tok.span + args[-1].span, tuple(args))
        return self.atom()

    def atom(self) -> SurfaceTerm:
        tok = self.tok
        if tok.kind == "ident":
            self.pos += 1
            return SurfaceTerm("Var", tok.span, name=tok.text)
        if tok.kind == "num":
            self.pos += 1
            return SurfaceTerm("Num", tok.span, value=int(tok.text))
        if tok.kind == "kw" and tok.text in _NULLARY:
            self.pos += 1
            return SurfaceTerm(_NULLARY[tok.text], tok.span)
        if self.at("("):
            self.pos += 1
            inner = self.term()
            close = self.expect(")")
            inner.span = tok.span + close.span
            return inner
        if self.at("pair"):
            return self._keyword_call("Pair", "A, x. B, a, b")
        if self.at("natrec"):
            return self._keyword_call("NatElim", "x. P, z, s, n")
        if self.at("idrec"):
            return self._keyword_call("IdElim", "A, a, y e. P, r, b, p")
        if self.at("exfalso"):
            return self._keyword_call("EmptyElim", "x. P, e")
        found = tok.text or "end of input"
        raise self.error(f"expected a term, found {found!r}")

    def _keyword_call(self, kind: str, shape: str) -> SurfaceTerm:
        start = self.tok.span
        self.pos += 1
        self.expect("(")
        args, binders = [], []
        for i, slot in enumerate(shape.split(", ")):
            if i:
                self.expect(",")
            names = []
            if "." in slot:
                for _ in slot.split(".")[0].split():
                    names.append(self.ident().text)
                self.expect(".")
            args.append(self.term())
            binders.append(tuple(names))
        close = self.expect(")")
        return SurfaceTerm(kind, start + close.span, tuple(args), tuple(binders))


def parse_term(text: str) -> SurfaceTerm:
    p = Parser(text)
    t = p.term()
    p.eof()
    return t


def parse_file(text: str) -> list[Definition]:
    p = Parser(text)
    defs = p.file()
    seen = set()
    for d in defs:
        if d.name in seen:
            raise FrontendError(Diagnostic("parse", f"duplicate definition {d.name!r}", d.span))
        seen.add(d.name)
    return defs


def parse(text: str) -> list[Definition] | SurfaceTerm:
    """Parse a whole file if it starts with ``def``, otherwise a single term."""
    tokens = tokenize(text)
    if tokens[0].kind == "kw" and tokens[0].text == "def":
        return parse_file(text)
    return parse_term(text)
