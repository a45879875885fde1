"""Kernel outcomes and the fuel budget.

Every kernel routine either returns its payload or raises one of the three
`KernelError` subclasses below. Fuel exhaustion and unreachable machine states
are kept apart from genuine type errors.
"""

from __future__ import annotations

DEFAULT_FUEL = 1_000_000


class KernelError(Exception):
    kind = "internal"


class TypeCheckError(KernelError):
    """A judgement failed to hold.

    `path` lists child positions (in constructor field order) from the subject
    of the outermost call down to the offending subterm.
    """

    kind = "type"

    def __init__(self, message: str, term=None, reason: str = "mismatch"):
        super().__init__(message)
        self.message = message
        self.term = term
        self.reason = reason
        self.path: list[int] = []


class OutOfFuel(KernelError):
    kind = "fuel"

    def __init__(self, message: str = "out of fuel"):
        super().__init__(message)


class IllFormed(KernelError):
    """An unreachable state: a canonical form met an incompatible eliminator."""

    kind = "internal"


class ContractViolation(AssertionError):
    """Raised in debug mode when a caller breaks an input precondition."""


class Fuel:
    """A mutable step budget shared by every routine of one kernel call."""

    __slots__ = ("remaining", "spent")

    def __init__(self, amount: int = DEFAULT_FUEL):
        if amount < 0:
            raise ValueError("fuel must be non-negative")
        self.remaining = amount
        self.spent = 0

    def tick(self, n: int = 1) -> None:
        if self.remaining < n:
            self.remaining = 0
            raise OutOfFuel()
        self.remaining -= n
        self.spent += n

    def __repr__(self):
        return f"Fuel(remaining={self.remaining}, spent={self.spent})"


def as_fuel(fuel: Fuel | int | None) -> Fuel:
    if fuel is None:
        return Fuel()
    if isinstance(fuel, Fuel):
        return fuel
    return Fuel(fuel)
