"""Algorithmic conversion.

Three mutually recursive procedures share one fuel budget:

* ``conv_ty``  compares two types after weak-head reduction;
* ``conv_tm``  compares two terms at a given type, applying η at Π and Σ;
* ``conv_ne``  compares two neutrals and synthesizes their common type.

Inputs are trusted to be well-formed. Only the public wrappers re-check
that in debug mode.
"""

from __future__ import annotations

from typing import Sequence

from . import contracts
from .errors import Fuel, IllFormed, TypeCheckError, as_fuel
from .reduction import is_neutral, run_machine
from .syntax import (
    App, Empty, EmptyElim, Fst, Id, IdElim, Nat, NatElim, Pi,
    Refl, Sigma, Snd, Succ, Term, Univ, Var, Zero, ctx_lookup, extend,
    idrec_motive_ctx, lift, natrec_step_type, subst1, subst2,
)


def _mismatch(what: str, t: Term, u: Term) -> TypeCheckError:
    return TypeCheckError(f"{what}: {type(t).__name__} vs {type(u).__name__}", t)


def _eta_app(t: Term) -> Term:
    # only ever built at Π types
    return App(lift(t), Var(0))


def _conv_ty(ctx: Sequence[Term], a: Term, b: Term, fuel: Fuel) -> None:
    fuel.tick()
    a = run_machine(a, fuel)
    b = run_machine(b, fuel)
    match a, b:
        case Univ(), Univ():
            return
        case Nat(), Nat():
            return
        case Empty(), Empty():
            return
        case Pi(a1, b1), Pi(a2, b2):
            _conv_ty(ctx, a1, a2, fuel)
            _conv_ty(extend(ctx, a1), b1, b2, fuel)
        case Sigma(a1, b1), Sigma(a2, b2):
            _conv_ty(ctx, a1, a2, fuel)
            _conv_ty(extend(ctx, a1), b1, b2, fuel)
        case Id(t1, x1, y1), Id(t2, x2, y2):
            _conv_ty(ctx, t1, t2, fuel)
            _conv_tm(ctx, x1, x2, t1, fuel)
            _conv_tm(ctx, y1, y2, t1, fuel)
        case _ if is_neutral(a) and is_neutral(b):
            _conv_ne(ctx, a, b, fuel)
        case _:
            if not _is_type_whnf(a) or not _is_type_whnf(b):
                raise IllFormed("conversion of types applied to a non-type")
            raise _mismatch("head mismatch", a, b)


def _is_type_whnf(t: Term) -> bool:
    return isinstance(t, (Univ, Pi, Sigma, Nat, Id, Empty)) or is_neutral(t)


def _conv_tm(ctx: Sequence[Term], t: Term, u: Term, ty: Term, fuel: Fuel) -> None:
    fuel.tick()
    ty = run_machine(ty, fuel)
    t = run_machine(t, fuel)
    u = run_machine(u, fuel)
    match ty:
        case Pi(dom, cod):
            _conv_tm(extend(ctx, dom), _eta_app(t), _eta_app(u), cod, fuel)
        case Sigma(dom, cod):
            _conv_tm(ctx, Fst(t), Fst(u), dom, fuel)
            _conv_tm(ctx, Snd(t), Snd(u), subst1(cod, Fst(t)), fuel)
        case Univ():
            _conv_ty(ctx, t, u, fuel)
        case Nat():
            match t, u:
                case Zero(), Zero():
                    return
                case Succ(m), Succ(n):
                    _conv_tm(ctx, m, n, ty, fuel)
                case _:
                    _conv_neutrals(ctx, t, u, fuel)
        case Id():
            match t, u:
                case Refl(), Refl():
                    # annotations are convertible to the type's components by precondition
                    return
                case _:
                    _conv_neutrals(ctx, t, u, fuel)
        case Empty():
            _conv_neutrals(ctx, t, u, fuel)
        case _ if is_neutral(ty):
            _conv_neutrals(ctx, t, u, fuel)
        case _:
            raise IllFormed(f"conversion at a non-type {type(ty).__name__}")


def _conv_neutrals(ctx, t, u, fuel):
    if is_neutral(t) and is_neutral(u):
        _conv_ne(ctx, t, u, fuel)
    else:
        raise _mismatch("terms are not convertible", t, u)


def _conv_ne(ctx: Sequence[Term], n: Term, m: Term, fuel: Fuel) -> Term:
    fuel.tick()
    match n, m:
        case Var(i), Var(j):
            if i != j:
                raise TypeCheckError(f"different variables #{i} and #{j}", n, reason="neutral")
            return ctx_lookup(ctx, i)
        case App(f, a), App(g, b):
            match run_machine(_conv_ne(ctx, f, g, fuel), fuel):
                case Pi(dom, cod):
                    _conv_tm(ctx, a, b, dom, fuel)
                    return subst1(cod, a)
            raise IllFormed("application of a neutral whose type is not a Π")
        case Fst(p), Fst(q):
            match run_machine(_conv_ne(ctx, p, q, fuel), fuel):
                case Sigma(dom, _):
                    return dom
            raise IllFormed("projection of a neutral whose type is not a Σ")
        case Snd(p), Snd(q):
            match run_machine(_conv_ne(ctx, p, q, fuel), fuel):
                case Sigma(_, cod):
                    return subst1(cod, Fst(p))
            raise IllFormed("projection of a neutral whose type is not a Σ")
        case NatElim(p1, z1, s1, k1), NatElim(p2, z2, s2, k2):
            _conv_ne(ctx, k1, k2, fuel)
            _conv_ty(extend(ctx, Nat()), p1, p2, fuel)
            _conv_tm(ctx, z1, z2, subst1(p1, Zero()), fuel)
            _conv_tm(ctx, s1, s2, natrec_step_type(p1), fuel)
            return subst1(p1, k1)
        case IdElim(a1, x1, p1, r1, y1, e1), IdElim(a2, x2, p2, r2, y2, e2):
            _conv_ne(ctx, e1, e2, fuel)
            _conv_ty(ctx, a1, a2, fuel)
            _conv_tm(ctx, x1, x2, a1, fuel)
            _conv_ty(idrec_motive_ctx(ctx, a1, x1), p1, p2, fuel)
            _conv_tm(ctx, r1, r2, subst2(p1, x1, Refl(a1, x1)), fuel)
            _conv_tm(ctx, y1, y2, a1, fuel)
            return subst2(p1, y1, e1)
        case EmptyElim(p1, e1), EmptyElim(p2, e2):
            _conv_ne(ctx, e1, e2, fuel)
            _conv_ty(extend(ctx, Empty()), p1, p2, fuel)
            return subst1(p1, e1)
    raise _mismatch("neutrals have different shapes", n, m)


def conv_ty(ctx: Sequence[Term], a: Term, b: Term, fuel: Fuel | int | None = None) -> None:
    """Succeeds iff `a` and `b` are convertible types; raises TypeCheckError otherwise."""
    fuel = as_fuel(fuel)
    if contracts.DEBUG:
        contracts.require_types(ctx, (a, b), fuel)
    _conv_ty(tuple(ctx), a, b, fuel)


def conv_tm(ctx: Sequence[Term], t: Term, u: Term, ty: Term, fuel: Fuel | int | None = None) -> None:
    """Succeeds iff `t` and `u` are convertible at `ty`."""
    fuel = as_fuel(fuel)
    if contracts.DEBUG:
        contracts.require_terms(ctx, (t, u), ty, fuel)
    _conv_tm(tuple(ctx), t, u, ty, fuel)


def conv_ne(ctx: Sequence[Term], n: Term, m: Term, fuel: Fuel | int | None = None) -> Term:
    """Compare two whnf neutrals; returns their common type."""
    fuel = as_fuel(fuel)
    if contracts.DEBUG:
        contracts.require_neutrals(ctx, (n, m), fuel)
    return _conv_ne(tuple(ctx), n, m, fuel)


def convertible(ctx: Sequence[Term], t: Term, u: Term, ty: Term, fuel: Fuel | int | None = None) -> bool:
    try:
        conv_tm(ctx, t, u, ty, fuel)
    except TypeCheckError:
        return False
    return True
