from __future__ import annotations

import itertools
from typing import Sequence

from ..syntax import (
    App, Empty, EmptyElim, Fst, Id, IdElim, Lam, Nat, NatElim, Pair, Pi,
    Refl, Sigma, Snd, Succ, Term, Univ, Var, Zero, as_numeral, free_vars,
)
from .parser import KEYWORDS

TOP, PRODUCT, APP, ATOM = 0, 1, 2, 3

_BASE_NAMES = ("x", "y", "z", "a", "b", "c", "n", "m", "p", "q")


def fresh_name(taken: Sequence[str]) -> str:
    taken = set(taken)
    for suffix in itertools.chain([""], itertools.count(1)):
        for base in _BASE_NAMES:
            name = f"{base}{suffix}"
            if name not in taken and name not in KEYWORDS:
                return name
    raise AssertionError("unreachable")


def print_term(t: Term, names: Sequence[str] = ()) -> str:
    """Render `t` in surface syntax; `names` lists bound names, innermost last."""
    return _show(t, list(names), TOP)


def _paren(s: str, needed: bool) -> str:
    return f"({s})" if needed else s


def _show(t: Term, names: list[str], level: int) -> str:
    match t:
        case Var(i):
            return names[-1 - i] if i < len(names) else f"#{i}"
        case Univ():
            return "Type"
        case Nat():
            return "Nat"
        case Empty():
            return "Empty"
        case Zero():
            return "zero"
        case Succ(pred):
            n = as_numeral(t)
            if n is not None:
                return str(n)
            return _paren(f"succ {_show(pred, names, ATOM)}", level > APP)
        case Pi(dom, cod) | Sigma(dom, cod):
            sym = "->" if isinstance(t, Pi) else "**"
            if 0 not in free_vars(cod):
                if isinstance(t, Sigma):
                    s = f"{_show(dom, names, APP)} ** {_show(cod, names + ['_'], PRODUCT)}"
                    return _paren(s, level > PRODUCT)
                s = f"{_show(dom, names, PRODUCT)} -> {_show(cod, names + ['_'], TOP)}"
            else:
                x = fresh_name(names)
                s = f"({x} : {_show(dom, names, TOP)}) {sym} {_show(cod, names + [x], TOP)}"
            return _paren(s, level > TOP)
        case Lam(dom, body):
            x = fresh_name(names)
            s = f"\\({x} : {_show(dom, names, TOP)}) => {_show(body, names + [x], TOP)}"
            return _paren(s, level > TOP)
        case App(fn, arg):
            return _paren(f"{_show(fn, names, APP)} {_show(arg, names, ATOM)}", level > APP)
        case Fst(p):
            return _paren(f"fst {_show(p, names, ATOM)}", level > APP)
        case Snd(p):
            return _paren(f"snd {_show(p, names, ATOM)}", level > APP)
        case Id(ty, lhs, rhs):
            args = " ".join(_show(a, names, ATOM) for a in (ty, lhs, rhs))
            return _paren(f"Id {args}", level > APP)
        case Refl(ty, tm):
            return _paren(f"refl {_show(ty, names, ATOM)} {_show(tm, names, ATOM)}", level > APP)
        case Pair(dom, cod, a, b):
            x = fresh_name(names)
            return (f"pair({_show(dom, names, TOP)}, {x}. {_show(cod, names + [x], TOP)}, "
                    f"{_show(a, names, TOP)}, {_show(b, names, TOP)})")
        case NatElim(motive, base, step, scrut):
            x = fresh_name(names)
            return (f"natrec({x}. {_show(motive, names + [x], TOP)}, {_show(base, names, TOP)}, "
                    f"{_show(step, names, TOP)}, {_show(scrut, names, TOP)})")
        case IdElim(ty, lhs, motive, base, rhs, proof):
            y = fresh_name(names)
            e = fresh_name(names + [y])
            return (f"idrec({_show(ty, names, TOP)}, {_show(lhs, names, TOP)}, "
                    f"{y} {e}. {_show(motive, names + [y, e], TOP)}, {_show(base, names, TOP)}, "
                    f"{_show(rhs, names, TOP)}, {_show(proof, names, TOP)})")
        case EmptyElim(motive, scrut):
            x = fresh_name(names)
            return f"exfalso({x}. {_show(motive, names + [x], TOP)}, {_show(scrut, names, TOP)})"
    raise TypeError(f"not a term: {t!r}")
