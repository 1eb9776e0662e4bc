"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: parse problems exit 2,
domain problems (unknown names, cycles, size guards, empty poset) exit 3,
and verification or precondition failures exit 4.
"""


class PosetPolyError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PosetPolyError):
    """Malformed text input. Carries the offset of the offending character."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class CycleError(PosetPolyError):
    """The strict edges of a poset close into a cycle (antisymmetry fails)."""


class UnknownNodeError(PosetPolyError):
    """A node name does not belong to the poset."""


class UnknownVariableError(PosetPolyError):
    """A polynomial mentions a variable that is not a poset node."""


class SizeLimitError(PosetPolyError):
    """An exhaustive construction was asked to exceed its size guard."""


class EmptyPosetError(PosetPolyError):
    """The operation needs at least one node."""


class PreconditionError(PosetPolyError):
    """A documented operation precondition does not hold."""


class InternalError(PosetPolyError):
    """A self-check that must always succeed has failed (implementation bug)."""
