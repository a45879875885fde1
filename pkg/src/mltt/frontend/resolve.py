from __future__ import annotations

from typing import Mapping, Sequence

from .. import syntax
from ..syntax import Term, Var, numeral
from .diagnostics import Diagnostic, FrontendError
from .parser import SurfaceTerm

CORE = {
    name: getattr(syntax, name)
    for name in ("Univ", "Pi", "Lam", "App", "Sigma", "Pair", "Fst", "Snd", "Nat", "Zero",
                 "Succ", "NatElim", "Id", "Refl", "IdElim", "Empty", "EmptyElim")
}


def resolve(s: SurfaceTerm, scope: Sequence[str] = (), defs: Mapping[str, Term] | None = None) -> Term:
    """Turn names into de Bruijn indices (innermost binding wins).

    `scope` lists bound names with the innermost last. Names that are not bound
    but appear in `defs` are replaced by the (closed) definition body.
    """
    defs = defs or {}
    scope = list(scope)

    def go(s: SurfaceTerm) -> Term:
        if s.kind == "Var":
            for i, name in enumerate(reversed(scope)):
                if name == s.name:
                    return Var(i)
            if s.name in defs:
                return defs[s.name]
            raise FrontendError(Diagnostic("parse", f"unbound identifier {s.name!r}", s.span))
        if s.kind == "Num":
            return numeral(s.value)
        cls = CORE[s.kind]
        args = []
        for arg, names in zip(s.args, s.binders):
            assert len(names) == cls.BINDERS[len(args)], (s.kind, names)
            scope.extend(names)
            try:
                args.append(go(arg))
            finally:
                del scope[len(scope) - len(names):]
        return cls(*args)

    return go(s)


def subterm_at(s: SurfaceTerm, path: Sequence[int]) -> SurfaceTerm:
    """Follow a core child path into the surface tree as far as it goes.

    Definition references and numerals have no surface children, so the walk
    stops there.
    """
    for i in path:
        if s.kind in ("Var", "Num") or i >= len(s.args):
            break
        s = s.args[i]
    return s
