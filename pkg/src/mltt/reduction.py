"""Weak-head reduction as a stack machine over elimination frames."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import Fuel, IllFormed, as_fuel
from .syntax import (
    App, Empty, EmptyElim, Fst, Id, IdElim, Lam, Nat, NatElim, Pair, Pi,
    Refl, Sigma, Snd, Succ, Term, Univ, Var, Zero, subst1,
)


class Frame:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class AppArg(Frame):
    arg: Term


@dataclass(frozen=True, slots=True)
class FstF(Frame):
    pass


@dataclass(frozen=True, slots=True)
class SndF(Frame):
    pass


@dataclass(frozen=True, slots=True)
class NatElimF(Frame):
    motive: Term
    base: Term
    step: Term


@dataclass(frozen=True, slots=True)
class IdElimF(Frame):
    ty: Term
    lhs: Term
    motive: Term
    base: Term
    rhs: Term


@dataclass(frozen=True, slots=True)
class EmptyElimF(Frame):
    motive: Term


def plug(frame: Frame, head: Term) -> Term:
    match frame:
        case AppArg(arg):
            return App(head, arg)
        case FstF():
            return Fst(head)
        case SndF():
            return Snd(head)
        case NatElimF(motive, base, step):
            return NatElim(motive, base, step, head)
        case IdElimF(ty, lhs, motive, base, rhs):
            return IdElim(ty, lhs, motive, base, rhs, head)
        case EmptyElimF(motive):
            return EmptyElim(motive, head)
    raise TypeError(f"not a frame: {frame!r}")


def zip_frames(head: Term, stack: Sequence[Frame]) -> Term:
    """Wrap `head` in each frame of `stack`, innermost frame first."""
    for frame in stack:
        head = plug(frame, head)
    return head


def unzip(t: Term) -> tuple[Term, list[Frame]]:
    """Split `t` into its head and its eliminator spine, innermost frame first."""
    frames: list[Frame] = []
    while True:
        match t:
            case App(fn, arg):
                frames.append(AppArg(arg))
                t = fn
            case Fst(p):
                frames.append(FstF())
                t = p
            case Snd(p):
                frames.append(SndF())
                t = p
            case NatElim(motive, base, step, scrut):
                frames.append(NatElimF(motive, base, step))
                t = scrut
            case IdElim(ty, lhs, motive, base, rhs, proof):
                frames.append(IdElimF(ty, lhs, motive, base, rhs))
                t = proof
            case EmptyElim(motive, scrut):
                frames.append(EmptyElimF(motive))
                t = scrut
            case _:
                frames.reverse()
                return t, frames


# -- whnf classification -----------------------------------------------------

@dataclass(frozen=True)
class CanonicalType:
    term: Term


@dataclass(frozen=True)
class CanonicalTerm:
    term: Term


@dataclass(frozen=True)
class Neutral:
    head: Var
    spine: tuple[Frame, ...]


@dataclass(frozen=True)
class NotWhnf:
    term: Term


WhnfView = CanonicalType | CanonicalTerm | Neutral | NotWhnf

_TYPE_HEADS = (Univ, Pi, Sigma, Nat, Id, Empty)
_TERM_HEADS = (Lam, Pair, Zero, Succ, Refl)


def classify(t: Term) -> WhnfView:
    """Whnf view of `t`.

    A canonical head under an eliminator is NotWhnf whether or not the pair
    forms a redex; `whnf` raises IllFormed on the non-redex combinations.
    """
    head, spine = unzip(t)
    if isinstance(head, Var):
        return Neutral(head, tuple(spine))
    if spine:
        return NotWhnf(t)
    if isinstance(head, _TYPE_HEADS):
        return CanonicalType(t)
    if isinstance(head, _TERM_HEADS):
        return CanonicalTerm(t)
    raise TypeError(f"not a term: {t!r}")


def is_whnf(t: Term) -> bool:
    return not isinstance(classify(t), NotWhnf)


def is_neutral(t: Term) -> bool:
    return isinstance(classify(t), Neutral)


# -- the machine -------------------------------------------------------------

def _fire(head: Term, frame: Frame) -> Term:
    match head, frame:
        case Lam(_, body), AppArg(arg):
            return subst1(body, arg)
        case Pair(_, _, a, _), FstF():
            return a
        case Pair(_, _, _, b), SndF():
            return b
        case Zero(), NatElimF(_, base, _):
            return base
        case Succ(n), NatElimF(motive, base, step):
            return App(App(step, n), NatElim(motive, base, step, n))
        case Refl(), IdElimF(_, _, _, base, _):
            return base
    raise IllFormed(f"{type(head).__name__} cannot be eliminated by {type(frame).__name__}")


def run_machine(t: Term, fuel: Fuel) -> Term:
    stack: list[Frame] = []  # top of stack is the innermost frame
    head = t
    while True:
        fuel.tick()
        match head:
            case App(fn, arg):
                stack.append(AppArg(arg))
                head = fn
            case Fst(p):
                stack.append(FstF())
                head = p
            case Snd(p):
                stack.append(SndF())
                head = p
            case NatElim(motive, base, step, scrut):
                stack.append(NatElimF(motive, base, step))
                head = scrut
            case IdElim(ty, lhs, motive, base, rhs, proof):
                stack.append(IdElimF(ty, lhs, motive, base, rhs))
                head = proof
            case EmptyElim(motive, scrut):
                stack.append(EmptyElimF(motive))
                head = scrut
            case _ if not stack:
                return head
            case Var():
                while stack:
                    fuel.tick()
                    head = plug(stack.pop(), head)
                return head
            case _:
                head = _fire(head, stack.pop())


def whnf(t: Term, fuel: Fuel | int | None = None) -> Term:
    """Weak-head normal form of `t`.

    Raises OutOfFuel when the budget runs out (one unit per machine
    transition) and IllFormed on a stuck non-neutral state.
    """
    return run_machine(t, as_fuel(fuel))


# -- one-step head reduction, kept separate from the machine ----------------

def head_reducts(t: Term) -> list[Term]:
    """Every t' with t ⇝ t' in one step, found rule by rule."""
    out: list[Term] = []
    # contraction rules
    match t:
        case App(Lam(_, body), arg):
            out.append(subst1(body, arg))
    match t:
        case Fst(Pair(_, _, a, _)):
            out.append(a)
    match t:
        case Snd(Pair(_, _, _, b)):
            out.append(b)
    match t:
        case NatElim(_, base, _, Zero()):
            out.append(base)
    match t:
        case NatElim(motive, base, step, Succ(n)):
            out.append(App(App(step, n), NatElim(motive, base, step, n)))
    match t:
        case IdElim(_, _, _, base, _, Refl()):
            out.append(base)
    # congruence in head position
    match t:
        case App(fn, arg):
            out.extend(App(r, arg) for r in head_reducts(fn))
        case Fst(p):
            out.extend(Fst(r) for r in head_reducts(p))
        case Snd(p):
            out.extend(Snd(r) for r in head_reducts(p))
        case NatElim(motive, base, step, scrut):
            out.extend(NatElim(motive, base, step, r) for r in head_reducts(scrut))
        case IdElim(ty, lhs, motive, base, rhs, proof):
            out.extend(IdElim(ty, lhs, motive, base, rhs, r) for r in head_reducts(proof))
        case EmptyElim(motive, scrut):
            out.extend(EmptyElim(motive, r) for r in head_reducts(scrut))
    return out


def step(t: Term) -> Term | None:
    reducts = head_reducts(t)
    return reducts[0] if reducts else None
