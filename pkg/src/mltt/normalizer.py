"""Deep, type-directed normalization to η-long normal form.

This is the differential oracle for ``conversion``: two well-typed terms are
convertible exactly when their normal forms are syntactically equal. It shares
syntax and ``whnf`` with the kernel and nothing else.
"""

from __future__ import annotations

from typing import Sequence

from .errors import DEFAULT_FUEL, Fuel, IllFormed, TypeCheckError, as_fuel
from .reduction import is_neutral, run_machine
from .syntax import (
    App, Empty, EmptyElim, Fst, Id, IdElim, Lam, Nat, NatElim, Pair, Pi,
    Refl, Sigma, Snd, Succ, Term, Univ, Var, Zero, alpha_eq, ctx_lookup,
    extend, idrec_motive_ctx, lift, natrec_step_type, subst1, subst2,
)

ORACLE_FUEL = 100 * DEFAULT_FUEL


def _fuel(fuel):
    return as_fuel(ORACLE_FUEL if fuel is None else fuel)


def _nf_ty(ctx: tuple, a: Term, fuel: Fuel) -> Term:
    fuel.tick()
    a = run_machine(a, fuel)
    match a:
        case Univ() | Nat() | Empty():
            return a
        case Pi(dom, cod):
            return Pi(_nf_ty(ctx, dom, fuel), _nf_ty(ctx + (dom,), cod, fuel))
        case Sigma(dom, cod):
            return Sigma(_nf_ty(ctx, dom, fuel), _nf_ty(ctx + (dom,), cod, fuel))
        case Id(ty, x, y):
            return Id(_nf_ty(ctx, ty, fuel), _nf_tm(ctx, x, ty, fuel), _nf_tm(ctx, y, ty, fuel))
    if is_neutral(a):
        return _nf_ne(ctx, a, fuel)[0]
    raise IllFormed(f"normalizing a non-type {type(a).__name__}")


def _nf_tm(ctx: tuple, t: Term, ty: Term, fuel: Fuel) -> Term:
    fuel.tick()
    ty = run_machine(ty, fuel)
    if isinstance(ty, Pi):
        body = _nf_tm(ctx + (ty.dom,), App(lift(t), Var(0)), ty.cod, fuel)
        return Lam(_nf_ty(ctx, ty.dom, fuel), body)
    if isinstance(ty, Sigma):
        return Pair(
            _nf_ty(ctx, ty.dom, fuel),
            _nf_ty(ctx + (ty.dom,), ty.cod, fuel),
            _nf_tm(ctx, Fst(t), ty.dom, fuel),
            _nf_tm(ctx, Snd(t), subst1(ty.cod, Fst(t)), fuel),
        )
    if isinstance(ty, Univ):
        return _nf_ty(ctx, t, fuel)
    t = run_machine(t, fuel)
    if isinstance(ty, Nat):
        # iterate along the successor spine to keep recursion shallow
        k = 0
        while isinstance(t, Succ):
            k += 1
            t = run_machine(t.pred, fuel)
        core = Zero() if isinstance(t, Zero) else _neutral_core(ctx, t, fuel)
        for _ in range(k):
            core = Succ(core)
        return core
    if isinstance(ty, Id) and isinstance(t, Refl):
        return Refl(_nf_ty(ctx, t.ty, fuel), _nf_tm(ctx, t.tm, t.ty, fuel))
    return _neutral_core(ctx, t, fuel)


def _neutral_core(ctx, t, fuel):
    if not is_neutral(t):
        raise TypeCheckError(f"{type(t).__name__} is not a value of this type", t)
    return _nf_ne(ctx, t, fuel)[0]


def _nf_ne(ctx: tuple, n: Term, fuel: Fuel) -> tuple[Term, Term]:
    """Normalize a neutral spine; also returns its type."""
    fuel.tick()
    match n:
        case Var(i):
            return n, ctx_lookup(ctx, i)
        case App(f, a):
            f_nf, f_ty = _nf_ne(ctx, f, fuel)
            f_ty = run_machine(f_ty, fuel)
            if not isinstance(f_ty, Pi):
                raise IllFormed("applied neutral is not a function")
            return App(f_nf, _nf_tm(ctx, a, f_ty.dom, fuel)), subst1(f_ty.cod, a)
        case Fst(p) | Snd(p):
            p_nf, p_ty = _nf_ne(ctx, p, fuel)
            p_ty = run_machine(p_ty, fuel)
            if not isinstance(p_ty, Sigma):
                raise IllFormed("projected neutral is not a pair")
            if isinstance(n, Fst):
                return Fst(p_nf), p_ty.dom
            return Snd(p_nf), subst1(p_ty.cod, Fst(p))
        case NatElim(motive, base, step, scrut):
            scrut_nf, _ = _nf_ne(ctx, scrut, fuel)
            return NatElim(
                _nf_ty(ctx + (Nat(),), motive, fuel),
                _nf_tm(ctx, base, subst1(motive, Zero()), fuel),
                _nf_tm(ctx, step, natrec_step_type(motive), fuel),
                scrut_nf,
            ), subst1(motive, scrut)
        case IdElim(ty, lhs, motive, base, rhs, proof):
            proof_nf, _ = _nf_ne(ctx, proof, fuel)
            return IdElim(
                _nf_ty(ctx, ty, fuel),
                _nf_tm(ctx, lhs, ty, fuel),
                _nf_ty(idrec_motive_ctx(ctx, ty, lhs), motive, fuel),
                _nf_tm(ctx, base, subst2(motive, lhs, Refl(ty, lhs)), fuel),
                _nf_tm(ctx, rhs, ty, fuel),
                proof_nf,
            ), subst2(motive, rhs, proof)
        case EmptyElim(motive, scrut):
            scrut_nf, _ = _nf_ne(ctx, scrut, fuel)
            return EmptyElim(_nf_ty(extend(ctx, Empty()), motive, fuel), scrut_nf), subst1(motive, scrut)
    raise IllFormed(f"{type(n).__name__} is not neutral")


def nf_ty(ctx: Sequence[Term], a: Term, fuel: Fuel | int | None = None) -> Term:
    return _nf_ty(tuple(ctx), a, _fuel(fuel))


def nf_tm(ctx: Sequence[Term], t: Term, ty: Term, fuel: Fuel | int | None = None) -> Term:
    """η-long deep normal form of `t` at type `ty`."""
    return _nf_tm(tuple(ctx), t, ty, _fuel(fuel))


def oracle_conv(ctx: Sequence[Term], t: Term, u: Term, ty: Term,
                fuel: Fuel | int | None = None) -> bool:
    fuel = _fuel(fuel)
    return alpha_eq(nf_tm(ctx, t, ty, fuel), nf_tm(ctx, u, ty, fuel))
