"""A small kernel for Martin-Löf type theory with Π, Σ, ℕ, Id, ⊥ and one universe."""

from .checker import check, check_ctx, infer, infer_red, wf_ty
from .conversion import conv_ne, conv_tm, conv_ty, convertible
from .errors import (
    DEFAULT_FUEL, ContractViolation, Fuel, IllFormed, KernelError, OutOfFuel,
    TypeCheckError,
)
from .normalizer import nf_tm, nf_ty, oracle_conv
from .reduction import classify, whnf

__all__ = [
    "DEFAULT_FUEL", "ContractViolation", "Fuel", "IllFormed", "KernelError",
    "OutOfFuel", "TypeCheckError", "check", "check_ctx", "classify", "conv_ne",
    "conv_tm", "conv_ty", "convertible", "infer", "infer_red", "nf_tm", "nf_ty",
    "oracle_conv", "wf_ty", "whnf",
]
