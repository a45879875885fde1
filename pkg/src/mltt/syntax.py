"""Core terms with de Bruijn indices, contexts, lifting and substitution.

Binders are implicit: a field listed in a constructor's ``BINDERS`` entry lives
under that many extra variables. ``Var(0)`` is the innermost one. A context is
a tuple of types with the innermost binding last.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import TypeCheckError


class Term:
    __slots__ = ()
    BINDERS: tuple[int, ...] = ()

    def children(self) -> tuple[Term, ...]:
        return tuple(getattr(self, name) for name in self.__match_args__)


def _term(binders: tuple[int, ...] = ()):
    def wrap(cls):
        cls = dataclass(frozen=True, slots=True)(cls)
        cls.BINDERS = binders
        return cls

    return wrap


@_term()
class Var(Term):
    index: int

    def children(self):
        return ()


@_term()
class Univ(Term):
    pass


@_term((0, 1))
class Pi(Term):
    dom: Term
    cod: Term


@_term((0, 1))
class Lam(Term):
    dom: Term
    body: Term


@_term((0, 0))
class App(Term):
    fn: Term
    arg: Term


@_term((0, 1))
class Sigma(Term):
    dom: Term
    cod: Term


@_term((0, 1, 0, 0))
class Pair(Term):
    dom: Term
    cod: Term
    fst: Term
    snd: Term


@_term((0,))
class Fst(Term):
    pair: Term


@_term((0,))
class Snd(Term):
    pair: Term


@_term()
class Nat(Term):
    pass


@_term()
class Zero(Term):
    pass


@_term((0,))
class Succ(Term):
    pred: Term


@_term((1, 0, 0, 0))
class NatElim(Term):
    motive: Term
    base: Term
    step: Term
    scrut: Term


@_term((0, 0, 0))
class Id(Term):
    ty: Term
    lhs: Term
    rhs: Term


@_term((0, 0))
class Refl(Term):
    ty: Term
    tm: Term


@_term((0, 0, 2, 0, 0, 0))
class IdElim(Term):
    ty: Term
    lhs: Term
    motive: Term
    base: Term
    rhs: Term
    proof: Term


@_term()
class Empty(Term):
    pass


@_term((1, 0))
class EmptyElim(Term):
    motive: Term
    scrut: Term


Context = tuple  # tuple[Term, ...], innermost binding last

TYPE_FORMERS = (Univ, Pi, Sigma, Nat, Id, Empty)
INTRO_FORMS = (Lam, Pair, Zero, Succ, Refl)
ELIM_FORMS = (App, Fst, Snd, NatElim, IdElim, EmptyElim)


def rebuild(t: Term, children: Sequence[Term]) -> Term:
    return type(t)(*children)


def _map_vars(t: Term, on_var: Callable[[int, int], Term], depth: int) -> Term:
    if isinstance(t, Var):
        return on_var(t.index, depth)
    if not t.BINDERS:
        return t
    return type(t)(*(
        _map_vars(c, on_var, depth + b) for c, b in zip(t.children(), t.BINDERS)
    ))


def lift(t: Term, amount: int = 1, cutoff: int = 0) -> Term:
    """Shift every free index at or above `cutoff` by `amount`."""
    if amount == 0:
        return t

    def on_var(i, depth):
        return Var(i + amount) if i >= cutoff + depth else Var(i)

    return _map_vars(t, on_var, 0)


def subst(body: Term, arg: Term, index: int = 0) -> Term:
    """Replace `Var(index)` by `arg` and close the gap left by the removed binder.

    `arg` lives in the context with that binder removed.
    """

    def on_var(i, depth):
        k = index + depth
        if i == k:
            return lift(arg, k, 0)
        if i > k:
            return Var(i - 1)
        return Var(i)

    return _map_vars(body, on_var, 0)


def subst1(body: Term, arg: Term) -> Term:
    return subst(body, arg, 0)


def subst2(body: Term, outer: Term, inner: Term) -> Term:
    """Instantiate a two-binder body: `Var(1)` := outer, `Var(0)` := inner."""
    return subst1(subst(body, lift(inner, 1, 0), 0), outer)


def alpha_eq(t: Term, u: Term) -> bool:
    # no names in the core: alpha-equivalence is structural equality
    return t == u


def free_vars(t: Term, depth: int = 0) -> set[int]:
    """Free indices of `t`, as seen from outside `depth` enclosing binders."""
    if isinstance(t, Var):
        return {t.index - depth} if t.index >= depth else set()
    out: set[int] = set()
    for c, b in zip(t.children(), t.BINDERS):
        out |= free_vars(c, depth + b)
    return out


def is_closed(t: Term, scope: int = 0) -> bool:
    return all(i < scope for i in free_vars(t))


def ctx_lookup(ctx: Sequence[Term], i: int) -> Term:
    """Type of `Var(i)`, lifted so that it is well-scoped in `ctx` itself."""
    if not 0 <= i < len(ctx):
        raise TypeCheckError(f"unbound variable #{i}", Var(i), reason="unbound")
    return lift(ctx[len(ctx) - 1 - i], i + 1, 0)


def extend(ctx: Sequence[Term], *types: Term) -> tuple[Term, ...]:
    return (*ctx, *types)


def arrow(dom: Term, cod: Term) -> Pi:
    """Non-dependent function type; `cod` is given in the outer context."""
    return Pi(dom, lift(cod, 1, 0))


def numeral(n: int) -> Term:
    t: Term = Zero()
    for _ in range(n):
        t = Succ(t)
    return t


def as_numeral(t: Term) -> int | None:
    n = 0
    while isinstance(t, Succ):
        t, n = t.pred, n + 1
    return n if isinstance(t, Zero) else None


def natrec_step_type(motive: Term) -> Term:
    """Type of the successor case: Π(n:ℕ). P n → P (S n)."""
    return Pi(Nat(), Pi(motive, subst1(lift(motive, 2, 1), Succ(Var(1)))))


def idrec_motive_ctx(ctx: Sequence[Term], ty: Term, lhs: Term) -> tuple[Term, ...]:
    """Context of a J motive: Γ, y : A, e : Id A x y."""
    return extend(ctx, ty, Id(lift(ty), lift(lhs), Var(0)))


def size(t: Term) -> int:
    return 1 + sum(size(c) for c in t.children())
