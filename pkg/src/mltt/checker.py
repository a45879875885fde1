"""Bidirectional type inference and checking.

Inference (``infer``) synthesizes a type, checking (``check``) is inference
followed by type conversion, and reduced inference (``infer_red``) weak-head
reduces the synthesized type to expose its head constructor. Contexts and
expected types are inputs: they are assumed well-formed and never re-checked
on the way down. Contexts are only ever extended with types that have just
been validated.
"""

from __future__ import annotations

from typing import Sequence

from . import contracts
from .conversion import _conv_ty
from .errors import Fuel, TypeCheckError, as_fuel
from .reduction import run_machine
from .syntax import (
    App, Empty, EmptyElim, Fst, Id, IdElim, Lam, Nat, NatElim, Pair, Pi,
    Refl, Sigma, Snd, Succ, Term, Univ, Var, Zero, ctx_lookup, extend,
    idrec_motive_ctx, natrec_step_type, subst1, subst2,
)


def _at(index: int, fn, *args):
    """Call a premise on the child at `index`, recording the path on failure."""
    try:
        return fn(*args)
    except TypeCheckError as err:
        err.path.insert(0, index)
        raise


def _infer(ctx: tuple, t: Term, fuel: Fuel) -> Term:
    fuel.tick()
    match t:
        case Var(i):
            return ctx_lookup(ctx, i)
        case Univ():
            raise TypeCheckError("Type has no type (there is a single universe)", t, reason="universe")
        case Nat() | Empty():
            return Univ()
        case Pi(dom, cod) | Sigma(dom, cod):
            _at(0, _check, ctx, dom, Univ(), fuel)
            _at(1, _check, extend(ctx, dom), cod, Univ(), fuel)
            return Univ()
        case Id(ty, lhs, rhs):
            _at(0, _check, ctx, ty, Univ(), fuel)
            _at(1, _check, ctx, lhs, ty, fuel)
            _at(2, _check, ctx, rhs, ty, fuel)
            return Univ()
        case Lam(dom, body):
            _at(0, _wf_ty, ctx, dom, fuel)
            cod = _at(1, _infer, extend(ctx, dom), body, fuel)
            return Pi(dom, cod)
        case App(fn, arg):
            fn_ty = _at(0, _infer_red, ctx, fn, fuel)
            if not isinstance(fn_ty, Pi):
                raise _expected("a function", fn_ty, fn, 0)
            _at(1, _check, ctx, arg, fn_ty.dom, fuel)
            return subst1(fn_ty.cod, arg)
        case Pair(dom, cod, a, b):
            _at(0, _wf_ty, ctx, dom, fuel)
            _at(1, _wf_ty, extend(ctx, dom), cod, fuel)
            _at(2, _check, ctx, a, dom, fuel)
            _at(3, _check, ctx, b, subst1(cod, a), fuel)
            return Sigma(dom, cod)
        case Fst(p):
            p_ty = _at(0, _infer_red, ctx, p, fuel)
            if not isinstance(p_ty, Sigma):
                raise _expected("a pair", p_ty, p, 0)
            return p_ty.dom
        case Snd(p):
            p_ty = _at(0, _infer_red, ctx, p, fuel)
            if not isinstance(p_ty, Sigma):
                raise _expected("a pair", p_ty, p, 0)
            return subst1(p_ty.cod, Fst(p))
        case Zero():
            return Nat()
        case Succ(n):
            _at(0, _check, ctx, n, Nat(), fuel)
            return Nat()
        case NatElim(motive, base, step, scrut):
            _at(0, _wf_ty, extend(ctx, Nat()), motive, fuel)
            _at(1, _check, ctx, base, subst1(motive, Zero()), fuel)
            _at(2, _check, ctx, step, natrec_step_type(motive), fuel)
            _at(3, _check, ctx, scrut, Nat(), fuel)
            return subst1(motive, scrut)
        case Refl(ty, x):
            _at(0, _wf_ty, ctx, ty, fuel)
            _at(1, _check, ctx, x, ty, fuel)
            return Id(ty, x, x)
        case IdElim(ty, lhs, motive, base, rhs, proof):
            _at(0, _wf_ty, ctx, ty, fuel)
            _at(1, _check, ctx, lhs, ty, fuel)
            _at(2, _wf_ty, idrec_motive_ctx(ctx, ty, lhs), motive, fuel)
            _at(3, _check, ctx, base, subst2(motive, lhs, Refl(ty, lhs)), fuel)
            _at(4, _check, ctx, rhs, ty, fuel)
            _at(5, _check, ctx, proof, Id(ty, lhs, rhs), fuel)
            return subst2(motive, rhs, proof)
        case EmptyElim(motive, scrut):
            _at(0, _wf_ty, extend(ctx, Empty()), motive, fuel)
            _at(1, _check, ctx, scrut, Empty(), fuel)
            return subst1(motive, scrut)
    raise TypeError(f"not a term: {t!r}")


def _expected(what: str, got: Term, subject: Term, index: int) -> TypeCheckError:
    err = TypeCheckError(f"expected {what}, but the type is {type(got).__name__}", subject,
                         reason="head")
    err.path.insert(0, index)
    return err


def _infer_red(ctx: tuple, t: Term, fuel: Fuel) -> Term:
    return run_machine(_infer(ctx, t, fuel), fuel)


def _check(ctx: tuple, t: Term, ty: Term, fuel: Fuel) -> None:
    inferred = _infer(ctx, t, fuel)
    try:
        _conv_ty(ctx, inferred, ty, fuel)
    except TypeCheckError as err:
        raise TypeCheckError(f"inferred type does not match the expected type ({err.message})", t,
                             reason="conversion") from err


def _wf_ty(ctx: tuple, ty: Term, fuel: Fuel) -> None:
    # Large types are only ever built from these formers; anything else is a
    # type exactly when it is a term of the universe.
    fuel.tick()
    match ty:
        case Univ() | Nat() | Empty():
            return
        case Pi(dom, cod) | Sigma(dom, cod):
            _at(0, _wf_ty, ctx, dom, fuel)
            _at(1, _wf_ty, extend(ctx, dom), cod, fuel)
        case Id(a, x, y):
            _at(0, _wf_ty, ctx, a, fuel)
            _at(1, _check, ctx, x, a, fuel)
            _at(2, _check, ctx, y, a, fuel)
        case _:
            try:
                _check(ctx, ty, Univ(), fuel)
            except TypeCheckError as err:
                if err.reason == "conversion":
                    raise TypeCheckError("not a type", ty, reason="not-a-type") from err
                raise


def _check_ctx(ctx: tuple, fuel: Fuel) -> None:
    for i, ty in enumerate(ctx):
        try:
            _wf_ty(ctx[:i], ty, fuel)
        except TypeCheckError as err:
            err.message = f"context entry {i}: {err.message}"
            err.args = (err.message,)
            err.reason = "context"
            err.path.insert(0, i)
            raise


# -- public entry points --------------------------------------------------------

def infer(ctx: Sequence[Term], t: Term, fuel: Fuel | int | None = None) -> Term:
    """Synthesize the type of `t`; the result is well-formed in `ctx`."""
    fuel = as_fuel(fuel)
    if contracts.DEBUG:
        contracts.require_ctx(ctx, fuel)
    return _infer(tuple(ctx), t, fuel)


def infer_red(ctx: Sequence[Term], t: Term, fuel: Fuel | int | None = None) -> Term:
    fuel = as_fuel(fuel)
    if contracts.DEBUG:
        contracts.require_ctx(ctx, fuel)
    return _infer_red(tuple(ctx), t, fuel)


def check(ctx: Sequence[Term], t: Term, ty: Term, fuel: Fuel | int | None = None) -> None:
    """Check `t` against `ty`; `ty` must already be a well-formed type."""
    fuel = as_fuel(fuel)
    if contracts.DEBUG:
        contracts.require_types(ctx, (ty,), fuel)
    _check(tuple(ctx), t, ty, fuel)


def wf_ty(ctx: Sequence[Term], ty: Term, fuel: Fuel | int | None = None) -> None:
    fuel = as_fuel(fuel)
    if contracts.DEBUG:
        contracts.require_ctx(ctx, fuel)
    _wf_ty(tuple(ctx), ty, fuel)


def check_ctx(ctx: Sequence[Term], fuel: Fuel | int | None = None) -> None:
    _check_ctx(tuple(ctx), as_fuel(fuel))
