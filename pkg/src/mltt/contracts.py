"""Debug-mode verification of judgement inputs.

Kernel routines assume their inputs (context, expected type) are already
well-formed and never re-check them. Setting ``MLTT_DEBUG=1`` in the
environment, or calling ``set_debug(True)``, makes the public entry points
verify those inputs first and raise ContractViolation when they do not hold.
"""

from __future__ import annotations

import os

from .errors import ContractViolation, Fuel, KernelError

DEBUG = os.environ.get("MLTT_DEBUG", "") not in ("", "0")


def set_debug(flag: bool) -> None:
    global DEBUG
    DEBUG = flag


def _verify(what, fn, *args):
    try:
        fn(*args)
    except KernelError as err:
        raise ContractViolation(f"precondition violated: {what} ({err})") from err


def require_ctx(ctx, fuel: Fuel) -> None:
    from .checker import _check_ctx

    _verify("context is not well-formed", _check_ctx, tuple(ctx), fuel)


def require_types(ctx, types, fuel: Fuel) -> None:
    from .checker import _wf_ty

    require_ctx(ctx, fuel)
    for ty in types:
        _verify("input is not a well-formed type", _wf_ty, tuple(ctx), ty, fuel)


def require_terms(ctx, terms, ty, fuel: Fuel) -> None:
    from .checker import _check

    require_types(ctx, (ty,), fuel)
    for t in terms:
        _verify("input is not well-typed", _check, tuple(ctx), t, ty, fuel)


def require_neutrals(ctx, terms, fuel: Fuel) -> None:
    from .checker import _infer
    from .reduction import is_neutral

    require_ctx(ctx, fuel)
    for t in terms:
        if not is_neutral(t):
            raise ContractViolation("precondition violated: input is not a whnf neutral")
        _verify("input is not well-typed", _infer, tuple(ctx), t, fuel)
